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

#include "ftbasis/graphic_matroid.h"

#include <numeric>

namespace ftbasis {

bool IsForest(int vertex_count, std::span<const Edge> edges,
              std::span<const ElementId> ids) {
  if (ids.size() >= static_cast<std::size_t>(std::max(vertex_count, 1))) {
    return false;
  }
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (ElementId id : ids) {
    const int a = find(edges[id].first);
    const int b = find(edges[id].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int vertex_count, std::vector<Edge> edges)
    : MatroidOracle(static_cast<ElementId>(edges.size())),
      vertex_count_(vertex_count),
      edges_(std::move(edges)) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InputError("edge " + std::to_string(i) + " = (" +
                       std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " +
                       std::to_string(vertex_count) + ")");
    }
  }
}

std::string GraphicMatroid::Describe() const {
  return "graphic matroid, " + std::to_string(vertex_count_) + " vertices, " +
         std::to_string(edges_.size()) + " edges";
}

bool GraphicMatroid::IsIndependentImpl(std::span<const ElementId> ids) const {
  return IsForest(vertex_count_, edges_, ids);
}

}  // namespace ftbasis
