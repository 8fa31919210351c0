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

#include "ftbasis/partition_matroid.h"

#include <algorithm>

namespace ftbasis {

PartitionMatroid::PartitionMatroid(std::vector<ElementSet> blocks)
    : PartitionMatroid(blocks, std::vector<int>(blocks.size(), 1)) {}

PartitionMatroid::PartitionMatroid(std::vector<ElementSet> blocks,
                                   std::vector<int> capacities)
    : MatroidOracle([&blocks] {
        std::size_t n = 0;
        for (const ElementSet& b : blocks) n += b.size();
        return static_cast<ElementId>(n);
      }()),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(static_cast<std::size_t>(ground_size()), -1) {
  if (capacities_.size() != blocks_.size()) {
    throw InputError("partition has " + std::to_string(blocks_.size()) +
                     " blocks but " + std::to_string(capacities_.size()) +
                     " capacities");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (capacities_[i] < 1) {
      throw InputError("capacity of block " + std::to_string(i) +
                       " must be positive");
    }
    for (ElementId e : blocks_[i]) {
      if (e < 0 || e >= ground_size()) {
        throw InputError("block " + std::to_string(i) + " holds element " +
                         std::to_string(e) + " outside [0, " +
                         std::to_string(ground_size()) + ")");
      }
      if (block_of_[e] >= 0) {
        throw InputError("element " + std::to_string(e) +
                         " appears in blocks " + std::to_string(block_of_[e]) +
                         " and " + std::to_string(i));
      }
      block_of_[e] = static_cast<int>(i);
    }
  }
}

bool PartitionMatroid::has_unit_capacities() const {
  return std::all_of(capacities_.begin(), capacities_.end(),
                     [](int c) { return c == 1; });
}

std::string PartitionMatroid::Describe() const {
  return "partition matroid, " + std::to_string(ground_size()) +
         " elements in " + std::to_string(blocks_.size()) + " blocks";
}

bool PartitionMatroid::IsIndependentImpl(
    std::span<const ElementId> ids) const {
  std::vector<int> used(blocks_.size(), 0);
  for (ElementId e : ids) {
    const int b = block_of_[e];
    if (++used[b] > capacities_[b]) return false;
  }
  return true;
}

}  // namespace ftbasis
