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

#ifndef FTBASIS_SOLVER_PARTITION_H_
#define FTBASIS_SOLVER_PARTITION_H_

#include <span>
#include <vector>

#include "ftbasis/element_set.h"
#include "ftbasis/matroid.h"
#include "ftbasis/partition_matroid.h"
#include "ftbasis/solve_report.h"

namespace ftbasis {

// Polynomial weighted solvers for partition matroids and rank <= 2.

// Minimum-weight X with rank(X - F) >= target_rank for every |F| <= k in the
// unit-capacity partition matroid given by `blocks` (a partition of
// 0..n-1). Sweeps s = 1 .. max block size; s is feasible iff
// sum_i min(|P_i|, s) >= s (r - 1) + k + 1, and for each feasible s the
// cheapest s (r - 1) + k + 1 elements with at most s per block are picked
// greedily. Ties: lower weight, then smaller s; within the greedy, lower id.
// O(n log n) sort plus O(n) per s.
SolveReport SolvePartitionUnit(std::span<const ElementSet> blocks,
                               const WeightMap& weights, int target_rank,
                               int k);

// Throws InputError unless every capacity is 1.
SolveReport SolvePartitionUnit(const PartitionMatroid& m,
                               const WeightMap& weights, int target_rank,
                               int k);

// Arbitrary capacities, full target rank: the c_i + k cheapest elements of
// every block. A capacity above the block size is clamped to the block size
// (that is the block's actual rank).
SolveReport SolvePartitionGeneral(std::span<const ElementSet> blocks,
                                  std::span<const int> capacities,
                                  const WeightMap& weights, int k);

// Classes of the relation y in cl({x}) on non-loops, each listed by its
// smallest element first. One closure per class representative, so
// O(n^2) queries in the worst case.
std::vector<ElementSet> CollinearityClasses(const MatroidOracle& m);

// Weighted solver for any matroid of rank <= 2 given by an oracle. Loops
// are ignored; rank 1 takes the k + 1 cheapest non-loops; rank 2 reduces to
// SolvePartitionUnit over the collinearity classes with target rank 2.
// Throws InputError if rank(M) > 2.
SolveReport SolveRankLe2(const MatroidOracle& m, const WeightMap& weights,
                         int k);

}  // namespace ftbasis

#endif  // FTBASIS_SOLVER_PARTITION_H_
