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

#include "ftbasis/solver_partition.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "ftbasis/matroid_ops.h"

namespace ftbasis {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Returns block index per element; validates that blocks partition 0..n-1.
std::vector<int> BlockIndex(std::span<const ElementSet> blocks,
                            const WeightMap& weights) {
  std::size_t n = 0;
  for (const ElementSet& b : blocks) n += b.size();
  if (weights.size() != n) {
    throw InputError("weight map has " + std::to_string(weights.size()) +
                     " entries for " + std::to_string(n) + " elements");
  }
  std::vector<int> block_of(n, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (ElementId e : blocks[i]) {
      if (e < 0 || static_cast<std::size_t>(e) >= n || block_of[e] >= 0) {
        throw InputError("blocks do not partition 0.." +
                         std::to_string(static_cast<long>(n) - 1) +
                         " (element " + std::to_string(e) + ")");
      }
      block_of[e] = static_cast<int>(i);
    }
  }
  return block_of;
}

std::vector<ElementId> ByWeight(const WeightMap& weights,
                                std::span<const ElementId> ids) {
  std::vector<ElementId> order(ids.begin(), ids.end());
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return weights[a] < weights[b];
  });
  return order;
}

// Counts and weight sums over positions 0..n-1.
class FenwickPrefix {
 public:
  explicit FenwickPrefix(std::size_t n) : count_(n + 1), sum_(n + 1) {
    while ((top_ << 1) <= n) top_ <<= 1;
  }

  void Add(std::size_t pos, std::int64_t weight) {
    for (std::size_t i = pos + 1; i < count_.size(); i += i & (~i + 1)) {
      ++count_[i];
      sum_[i] += weight;
    }
  }

  // Total weight of the `count` lowest occupied positions; needs that many.
  std::int64_t SmallestSum(std::size_t count) const {
    std::size_t at = 0;
    std::int64_t total = 0;
    for (std::size_t step = top_; step > 0; step >>= 1) {
      const std::size_t next = at + step;
      if (next < count_.size() && count_[next] <= count) {
        count -= count_[next];
        total += sum_[next];
        at = next;
      }
    }
    return total;
  }

 private:
  std::vector<std::size_t> count_;
  std::vector<std::int64_t> sum_;
  std::size_t top_ = 1;
};

void Fill(SolveReport& report, std::optional<ElementSet> solution,
          const WeightMap& weights, Clock::time_point start) {
  report.exists = solution.has_value();
  if (solution) {
    report.weight = weights.Total(*solution);
    report.solution = std::move(solution);
  }
  report.stats.wall_ms = MillisSince(start);
}

}  // namespace

SolveReport SolvePartitionUnit(std::span<const ElementSet> blocks,
                               const WeightMap& weights, int target_rank,
                               int k) {
  if (target_rank < 0 || k < 0) {
    throw InputError("target rank and k must be >= 0");
  }
  const auto start = Clock::now();
  const std::vector<int> block_of = BlockIndex(blocks, weights);
  const std::size_t n = block_of.size();
  SolveReport report;
  report.stats.solver = "partition";
  if (target_rank == 0) {
    Fill(report, ElementSet{}, weights, start);
    return report;
  }

  std::vector<ElementId> all(n);
  std::iota(all.begin(), all.end(), 0);
  const std::vector<ElementId> order = ByWeight(weights, all);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  // Each block's elements, lightest first.
  std::vector<std::vector<ElementId>> sorted_blocks;
  std::size_t largest = 0;
  for (const ElementSet& b : blocks) {
    sorted_blocks.push_back(ByWeight(weights, b.ids()));
    largest = std::max(largest, b.size());
  }

  // For cap s the cheapest choice is the `need` lightest elements among the
  // s lightest of each block. Raising s adds one element per block, so a
  // Fenwick tree over weight order answers each s in O(log n).
  FenwickPrefix active(n);
  std::optional<std::size_t> best_cap;
  std::int64_t best_weight = 0;
  std::size_t supply = 0;
  for (std::size_t s = 1; s <= largest; ++s) {
    for (const auto& block : sorted_blocks) {
      if (block.size() >= s) {
        active.Add(position[block[s - 1]], weights[block[s - 1]]);
        ++supply;
      }
    }
    const std::size_t need =
        s * static_cast<std::size_t>(target_rank - 1) +
        static_cast<std::size_t>(k) + 1;
    // need grows with s while the supply never exceeds n.
    if (need > n) break;
    if (supply < need) continue;
    ++report.stats.subsets_examined;
    const std::int64_t weight = active.SmallestSum(need);
    if (!best_cap || weight < best_weight) {
      best_cap = s;
      best_weight = weight;
    }
  }

  std::optional<ElementSet> best;
  if (best_cap) {
    const std::size_t s = *best_cap;
    const std::size_t need =
        s * static_cast<std::size_t>(target_rank - 1) +
        static_cast<std::size_t>(k) + 1;
    std::vector<std::size_t> taken(blocks.size());
    std::vector<ElementId> pick;
    for (ElementId e : order) {
      if (pick.size() == need) break;
      if (taken[block_of[e]] == s) continue;
      ++taken[block_of[e]];
      pick.push_back(e);
    }
    best = ElementSet(std::move(pick));
  }
  Fill(report, std::move(best), weights, start);
  return report;
}

SolveReport SolvePartitionUnit(const PartitionMatroid& m,
                               const WeightMap& weights, int target_rank,
                               int k) {
  if (!m.has_unit_capacities()) {
    throw InputError(
        "unit-capacity partition solver called on a partition matroid with a "
        "capacity other than 1");
  }
  return SolvePartitionUnit(m.blocks(), weights, target_rank, k);
}

SolveReport SolvePartitionGeneral(std::span<const ElementSet> blocks,
                                  std::span<const int> capacities,
                                  const WeightMap& weights, int k) {
  if (k < 0) throw InputError("k must be >= 0");
  if (capacities.size() != blocks.size()) {
    throw InputError("one capacity per block required");
  }
  const auto start = Clock::now();
  BlockIndex(blocks, weights);
  SolveReport report;
  report.stats.solver = "partition";
  std::vector<ElementId> chosen;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (capacities[i] < 1) throw InputError("capacities must be positive");
    const std::size_t cap =
        std::min(static_cast<std::size_t>(capacities[i]), blocks[i].size());
    if (cap == 0) continue;
    const std::size_t need = cap + static_cast<std::size_t>(k);
    if (blocks[i].size() < need) {
      Fill(report, std::nullopt, weights, start);
      return report;
    }
    const std::vector<ElementId> order = ByWeight(weights, blocks[i].ids());
    chosen.insert(chosen.end(), order.begin(), order.begin() + need);
  }
  Fill(report, ElementSet(std::move(chosen)), weights, start);
  return report;
}

std::vector<ElementSet> CollinearityClasses(const MatroidOracle& m) {
  const ElementSet loops = Loops(m);
  std::vector<char> assigned(static_cast<std::size_t>(m.ground_size()), 0);
  for (ElementId e : loops) assigned[e] = 1;
  std::vector<ElementSet> classes;
  for (ElementId e = 0; e < m.ground_size(); ++e) {
    if (assigned[e]) continue;
    ElementSet cls = Closure(m, ElementSet{e}).Difference(loops);
    for (ElementId x : cls) assigned[x] = 1;
    classes.push_back(std::move(cls));
  }
  return classes;
}

SolveReport SolveRankLe2(const MatroidOracle& m, const WeightMap& weights,
                         int k) {
  if (k < 0) throw InputError("k must be >= 0");
  if (weights.size() != static_cast<std::size_t>(m.ground_size())) {
    throw InputError("weight map has " + std::to_string(weights.size()) +
                     " entries for " + std::to_string(m.ground_size()) +
                     " elements");
  }
  const auto start = Clock::now();
  CallMeter meter(m);
  SolveReport report;
  const int rank = static_cast<int>(FindBasis(m).size());
  if (rank > 2) {
    throw InputError("rank-2 solver needs rank(M) <= 2, got " +
                     std::to_string(rank));
  }
  auto finish = [&](std::optional<ElementSet> solution) {
    Fill(report, std::move(solution), weights, start);
    report.stats.oracle_calls = meter.calls();
    report.stats.solver = "rank2";
    return report;
  };
  if (rank == 0) return finish(ElementSet{});

  if (rank == 1) {
    const ElementSet non_loops =
        ElementSet::Range(m.ground_size()).Difference(Loops(m));
    const std::size_t need = static_cast<std::size_t>(k) + 1;
    if (non_loops.size() < need) return finish(std::nullopt);
    const std::vector<ElementId> order = ByWeight(weights, non_loops.ids());
    return finish(ElementSet(
        std::vector<ElementId>(order.begin(), order.begin() + need)));
  }

  // Renumber non-loops densely, class by class.
  const std::vector<ElementSet> classes = CollinearityClasses(m);
  std::vector<ElementId> original;
  std::vector<ElementSet> blocks;
  std::vector<std::int64_t> local_weights;
  for (const ElementSet& cls : classes) {
    std::vector<ElementId> block;
    for (ElementId e : cls) {
      block.push_back(static_cast<ElementId>(original.size()));
      original.push_back(e);
      local_weights.push_back(weights[e]);
    }
    blocks.push_back(ElementSet::FromSorted(std::move(block)));
  }
  const SolveReport reduced = SolvePartitionUnit(
      blocks, WeightMap(std::move(local_weights)), /*target_rank=*/2, k);
  if (!reduced.exists) return finish(std::nullopt);
  std::vector<ElementId> mapped;
  for (ElementId e : *reduced.solution) mapped.push_back(original[e]);
  return finish(ElementSet(std::move(mapped)));
}

}  // namespace ftbasis
