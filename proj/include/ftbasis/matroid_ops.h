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

#ifndef FTBASIS_MATROID_OPS_H_
#define FTBASIS_MATROID_OPS_H_

#include <optional>
#include <utility>

#include "ftbasis/element_set.h"
#include "ftbasis/matroid.h"
#include "ftbasis/views.h"

namespace ftbasis {

// Generic operations over an independence oracle. All of them are pure
// functions of (oracle, arguments); the only side effect is the oracle's
// query counter. Element ids are range-checked and violations throw
// InputError.

// Size of the greedy maximal independent subset of `set`, scanning in
// ascending id order. Issues |set| queries.
int Rank(const MatroidOracle& m, const ElementSet& set);

// The greedy independent subset itself.
ElementSet GreedyIndependentSubset(const MatroidOracle& m,
                                   const ElementSet& set);

// {x : rank(set + x) = rank(set)}. One query per element of `set` to find a
// maximal independent subset, then one query per element outside `set`.
ElementSet Closure(const MatroidOracle& m, const ElementSet& set);

// Greedy basis in ascending id order.
ElementSet FindBasis(const MatroidOracle& m);

struct RankProfile {
  int full_rank = 0;
  ElementSet loops;
};

RankProfile ComputeRankProfile(const MatroidOracle& m);

// Elements e with {e} dependent.
ElementSet Loops(const MatroidOracle& m);

// M minus its loops. The view refers to `m`, which must outlive it.
struct LoopFreeMatroid {
  DeletionView view;
  ElementSet loops;
};
LoopFreeMatroid RemoveLoops(const MatroidOracle& m);

inline DeletionView Delete(const MatroidOracle& m, const ElementSet& removed) {
  return DeletionView(m, removed);
}

inline TruncationView Truncate(const MatroidOracle& m, int rank_cap) {
  return TruncationView(m, rank_cap);
}

// Returns a failure set F subset of `set`, |F| = min(k, |set|), with
// rank(set - F) < target_rank, or nullopt if there is none. Larger F
// dominate smaller ones because rank is monotone, so only the largest size
// is enumerated (lexicographic order; the first witness is returned).
std::optional<ElementSet> FindFailureSet(const MatroidOracle& m,
                                         const ElementSet& set, int k,
                                         int target_rank);

// True iff rank(set - F) = rank(M) for every F subset of `set` with
// |F| <= k.
bool IsFaultTolerant(const MatroidOracle& m, const ElementSet& set, int k);
// Same, with rank(M) supplied by the caller.
bool IsFaultTolerant(const MatroidOracle& m, const ElementSet& set, int k,
                     int full_rank);

// rank(set) = h and every h-subset of `set` is independent. Requires h >= 1.
bool IsHUniform(const MatroidOracle& m, const ElementSet& set, int h);

// Cardinality window [r + k, (k + 1) r] of a minimum k-fault-tolerant basis
// of a rank-r matroid. Requires r >= 1 (for r = 0 the empty set is the only
// solution and callers handle it directly).
std::pair<int, int> SizeBounds(int rank, int k);

}  // namespace ftbasis

#endif  // FTBASIS_MATROID_OPS_H_
