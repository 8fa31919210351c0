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

#include "ftbasis/solve_report.h"

namespace ftbasis {

WeightMap::WeightMap(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0 || weights_[i] > kMaxWeight) {
      throw InputError("weight of element " + std::to_string(i) + " is " +
                       std::to_string(weights_[i]) +
                       "; weights must lie in [0, 2^32 - 1]");
    }
  }
}

WeightMap WeightMap::Unit(ElementId n) {
  return WeightMap(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
}

std::int64_t WeightMap::Total(const ElementSet& set) const {
  std::int64_t total = 0;
  for (ElementId e : set) total += weights_[e];
  return total;
}

}  // namespace ftbasis
