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

#ifndef FTBASIS_SUBSET_SEARCH_H_
#define FTBASIS_SUBSET_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>

#include "ftbasis/element_set.h"
#include "ftbasis/solve_report.h"

namespace ftbasis {

using FeasibilityTest = std::function<bool(const ElementSet&)>;

// Visits the subsets of `pool` with lo <= size <= hi by increasing size and,
// within a size, lexicographically. Returns the first subset passing
// `feasible`. `examined` accumulates the number of tested subsets; exceeding
// options.budget throws ResourceError.
std::optional<ElementSet> FirstFeasibleInWindow(const ElementSet& pool, int lo,
                                                int hi,
                                                const FeasibilityTest& feasible,
                                                const SearchOptions& options,
                                                std::uint64_t& examined);

// Tests every subset in the window and returns the feasible one of minimum
// total weight, ties broken by (size, lexicographic) order.
std::optional<ElementSet> MinWeightFeasibleInWindow(
    const ElementSet& pool, int lo, int hi, const FeasibilityTest& feasible,
    const WeightMap& weights, const SearchOptions& options,
    std::uint64_t& examined);

}  // namespace ftbasis

#endif  // FTBASIS_SUBSET_SEARCH_H_
