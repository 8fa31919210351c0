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

#ifndef FTBASIS_SOLVER_EXACT_H_
#define FTBASIS_SOLVER_EXACT_H_

#include <optional>

#include "ftbasis/matroid.h"
#include "ftbasis/solve_report.h"

namespace ftbasis {

// Reference solvers by exhaustive enumeration. Slow, but with no reasoning
// beyond the definitions and the cardinality window; every other solver is
// tested against these.

// True iff E itself survives every failure set of size min(k, n), which is
// exactly when some k-fault-tolerant basis exists.
bool ExistsFtBasis(const MatroidOracle& m, int k);

// Minimum k-fault-tolerant basis.
//
// Without weights: subsets of sizes r + k .. (k + 1) r are tried by
// increasing size, lexicographically within a size; the first feasible one
// is returned. With weights: every subset in the window is tested and the
// minimum-weight feasible one wins (ties: smaller, then lexicographically
// first). Throws ResourceError once options.budget subsets were examined.
SolveReport SolveBruteforce(const MatroidOracle& m, int k,
                            const std::optional<WeightMap>& weights = {},
                            const SearchOptions& options = {});

}  // namespace ftbasis

#endif  // FTBASIS_SOLVER_EXACT_H_
