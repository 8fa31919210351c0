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

#ifndef FTBASIS_SOLVER_FPT_H_
#define FTBASIS_SOLVER_FPT_H_

#include <gmpxx.h>

#include <cstddef>
#include <string_view>
#include <vector>

#include "ftbasis/element_set.h"
#include "ftbasis/matroid.h"
#include "ftbasis/solve_report.h"

namespace ftbasis {

// Parameters of the important-element search for a rank-r matroid and k
// failures. Size thresholds grow like ((k+1)r)^(r-1) and are kept as big
// integers.
class ImportantConfig {
 public:
  ImportantConfig(int k, int rank, bool memoize = true);

  int k() const { return k_; }
  int rank() const { return rank_; }
  bool memoize() const { return memoize_; }
  // (k + 1) r, the largest possible size of a minimum solution.
  int max_solution_size() const { return (k_ + 1) * rank_; }

  // (h - 1) ((k + 1) r)^(r - 1) + (k + 1) r. An h-uniform set at least this
  // large may stand in for its whole closure.
  mpz_class Threshold(int h) const;
  // h^(h^2) ((k + 1) r)^(r h^2): bound on the output for an h-element input.
  mpz_class OutputBound(int h) const;
  // r^(r^2) ((k + 1) r)^(r^3): bound on the final candidate set.
  mpz_class CandidateBound() const { return OutputBound(rank_); }

 private:
  int k_;
  int rank_;
  bool memoize_;
};

// Node of the recursion tree of Important().
struct ImportantTrace {
  enum class Outcome {
    kClosureSmall,  // closure at or below the threshold, returned whole
    kBaseCapped,    // h = 1 with a large closure: lowest (k+1)r ids kept
    kFullUniform,   // greedy reached the threshold, Z returned
    kRecursed,      // Z maximal but small, union over (h-1)-subsets
    kCached,        // repeated input answered from the memo
  };

  ElementSet input;
  int h = 0;
  Outcome outcome = Outcome::kClosureSmall;
  std::size_t closure_size = 0;
  std::size_t uniform_size = 0;
  std::size_t output_size = 0;
  std::vector<ImportantTrace> children;

  int Depth() const;
};

std::string_view OutcomeName(ImportantTrace::Outcome outcome);

// Grows `seed` (independent, |seed| = h) inside `closure` = cl(seed): scans
// closure elements by ascending id and adds x whenever Z + x stays
// h-uniform. Stops at `cap` elements or after a full pass. Only h-subsets
// containing x are queried since the rest are already certified.
ElementSet GreedyUniformWithin(const MatroidOracle& m, const ElementSet& seed,
                               int h, std::size_t cap,
                               const ElementSet& closure);

// As above, computing cl(seed) first. Throws InputError if the seed is not
// an independent set of size h or cap < h.
ElementSet GreedyUniform(const MatroidOracle& m, const ElementSet& seed, int h,
                         std::size_t cap);

// Important-element search for a loop-free matroid and a non-empty
// independent set X with |X| = h <= r. Returns Y within cl(X) such that any
// k-fault-tolerant basis can be exchanged, inside cl(X) only, for one that
// meets cl(X) in a subset of Y.
ElementSet Important(const MatroidOracle& m, const ElementSet& x,
                     const ImportantConfig& config,
                     ImportantTrace* trace = nullptr);

struct FptDetails {
  int rank = 0;
  ElementSet loops;
  // Candidate set W in original ids.
  ElementSet candidates;
  ImportantTrace trace;
};

// Minimum k-fault-tolerant basis: delete loops, compute W from a greedy
// basis, then search subsets of W of size r + k .. min((k+1) r, |W|) by
// increasing size. The size always equals the brute-force optimum.
SolveReport SolveFpt(const MatroidOracle& m, int k,
                     const SearchOptions& options = {},
                     FptDetails* details = nullptr);

}  // namespace ftbasis

#endif  // FTBASIS_SOLVER_FPT_H_
