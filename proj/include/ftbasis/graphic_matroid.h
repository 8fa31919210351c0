// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTBASIS_GRAPHIC_MATROID_H_
#define FTBASIS_GRAPHIC_MATROID_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ftbasis/matroid.h"

namespace ftbasis {

using Edge = std::pair<int, int>;

// Cycle matroid of a multigraph. Element i is edges[i]; a set of edges is
// independent iff it is a forest. Self-loops are matroid loops.
class GraphicMatroid final : public MatroidOracle {
 public:
  GraphicMatroid(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(std::span<const ElementId> ids) const override;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

// Acyclicity of the selected edges via disjoint-set union.
bool IsForest(int vertex_count, std::span<const Edge> edges,
              std::span<const ElementId> ids);

}  // namespace ftbasis

#endif  // FTBASIS_GRAPHIC_MATROID_H_
