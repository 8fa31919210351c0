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

#include "ftbasis/transversal_matroid.h"

namespace ftbasis {
namespace {

bool Augment(int left, std::span<const std::vector<int>> adjacency,
             std::span<const ElementId> ids, std::vector<int>& owner,
             std::vector<char>& seen) {
  for (int target : adjacency[ids[left]]) {
    if (seen[target]) continue;
    seen[target] = 1;
    if (owner[target] < 0 ||
        Augment(owner[target], adjacency, ids, owner, seen)) {
      owner[target] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

int MaxMatching(int target_count, std::span<const std::vector<int>> adjacency,
                std::span<const ElementId> ids) {
  std::vector<int> owner(static_cast<std::size_t>(target_count), -1);
  std::vector<char> seen(static_cast<std::size_t>(target_count));
  int matched = 0;
  for (std::size_t left = 0; left < ids.size(); ++left) {
    std::fill(seen.begin(), seen.end(), 0);
    if (Augment(static_cast<int>(left), adjacency, ids, owner, seen)) {
      ++matched;
    }
  }
  return matched;
}

TransversalMatroid::TransversalMatroid(int target_count,
                                       std::vector<std::vector<int>> adjacency)
    : MatroidOracle(static_cast<ElementId>(adjacency.size())),
      target_count_(target_count),
      adjacency_(std::move(adjacency)) {
  if (target_count < 0) throw InputError("negative target count");
  for (std::size_t e = 0; e < adjacency_.size(); ++e) {
    for (int t : adjacency_[e]) {
      if (t < 0 || t >= target_count) {
        throw InputError("element " + std::to_string(e) +
                         " is adjacent to position " + std::to_string(t) +
                         " outside [0, " + std::to_string(target_count) + ")");
      }
    }
  }
}

std::string TransversalMatroid::Describe() const {
  return "transversal matroid, " + std::to_string(ground_size()) +
         " elements, " + std::to_string(target_count_) + " positions";
}

bool TransversalMatroid::IsIndependentImpl(
    std::span<const ElementId> ids) const {
  if (ids.size() > static_cast<std::size_t>(target_count_)) return false;
  return MaxMatching(target_count_, adjacency_, ids) ==
         static_cast<int>(ids.size());
}

}  // namespace ftbasis
