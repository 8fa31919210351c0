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

#ifndef FTBASIS_PARTITION_MATROID_H_
#define FTBASIS_PARTITION_MATROID_H_

#include <span>
#include <string>
#include <vector>

#include "ftbasis/element_set.h"
#include "ftbasis/matroid.h"

namespace ftbasis {

// X is independent iff |X ∩ blocks[i]| <= capacities[i] for every block.
// Blocks must partition {0..n-1}; capacities must be positive.
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(std::vector<ElementSet> blocks, std::vector<int> capacities);
  // All capacities 1.
  explicit PartitionMatroid(std::vector<ElementSet> blocks);

  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }
  int block_of(ElementId e) const { return block_of_[e]; }
  bool has_unit_capacities() const;
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(std::span<const ElementId> ids) const override;

 private:
  std::vector<ElementSet> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
};

}  // namespace ftbasis

#endif  // FTBASIS_PARTITION_MATROID_H_
