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

#ifndef FTBASIS_TRANSVERSAL_MATROID_H_
#define FTBASIS_TRANSVERSAL_MATROID_H_

#include <span>
#include <string>
#include <vector>

#include "ftbasis/matroid.h"

namespace ftbasis {

// Transversal matroid of a bipartite graph between the ground set and
// `target_count` positions. adjacency[e] lists the positions element e may
// take; X is independent iff X can be matched injectively into positions.
//
// Each query runs augmenting-path matching from scratch.
class TransversalMatroid final : public MatroidOracle {
 public:
  TransversalMatroid(int target_count, std::vector<std::vector<int>> adjacency);

  int target_count() const { return target_count_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(std::span<const ElementId> ids) const override;

 private:
  int target_count_;
  std::vector<std::vector<int>> adjacency_;
};

// Size of a maximum matching of the selected elements into positions.
int MaxMatching(int target_count, std::span<const std::vector<int>> adjacency,
                std::span<const ElementId> ids);

}  // namespace ftbasis

#endif  // FTBASIS_TRANSVERSAL_MATROID_H_
