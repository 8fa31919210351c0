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

#include "ftbasis/matroid_ops.h"

#include <algorithm>
#include <string>
#include <vector>

#include "ftbasis/combinations.h"

namespace ftbasis {
namespace {

void CheckK(int k) {
  if (k < 0) throw InputError("k must be >= 0, got " + std::to_string(k));
}

// Scans `ids` (ascending) and keeps each element that preserves
// independence. Works on raw vectors so callers can skip range checks.
std::vector<ElementId> GreedyScan(const MatroidOracle& m,
                                  std::span<const ElementId> ids) {
  std::vector<ElementId> kept;
  kept.reserve(ids.size());
  for (ElementId e : ids) {
    kept.push_back(e);
    if (!m.IsIndependent(kept)) kept.pop_back();
  }
  return kept;
}

}  // namespace

ElementSet GreedyIndependentSubset(const MatroidOracle& m,
                                   const ElementSet& set) {
  CheckInRange(set, m.ground_size());
  return ElementSet::FromSorted(GreedyScan(m, set.ids()));
}

int Rank(const MatroidOracle& m, const ElementSet& set) {
  return static_cast<int>(GreedyIndependentSubset(m, set).size());
}

ElementSet Closure(const MatroidOracle& m, const ElementSet& set) {
  CheckInRange(set, m.ground_size());
  const std::vector<ElementId> basis = GreedyScan(m, set.ids());
  std::vector<ElementId> out;
  std::vector<ElementId> probe;
  probe.reserve(basis.size() + 1);
  for (ElementId x = 0; x < m.ground_size(); ++x) {
    if (set.contains(x)) {
      out.push_back(x);
      continue;
    }
    probe.assign(basis.begin(), basis.end());
    probe.insert(std::lower_bound(probe.begin(), probe.end(), x), x);
    if (!m.IsIndependent(probe)) out.push_back(x);
  }
  return ElementSet::FromSorted(std::move(out));
}

ElementSet FindBasis(const MatroidOracle& m) {
  return GreedyIndependentSubset(m, ElementSet::Range(m.ground_size()));
}

ElementSet Loops(const MatroidOracle& m) {
  std::vector<ElementId> loops;
  for (ElementId e = 0; e < m.ground_size(); ++e) {
    const ElementId single[] = {e};
    if (!m.IsIndependent(single)) loops.push_back(e);
  }
  return ElementSet::FromSorted(std::move(loops));
}

RankProfile ComputeRankProfile(const MatroidOracle& m) {
  return RankProfile{static_cast<int>(FindBasis(m).size()), Loops(m)};
}

LoopFreeMatroid RemoveLoops(const MatroidOracle& m) {
  ElementSet loops = Loops(m);
  return LoopFreeMatroid{DeletionView(m, loops), std::move(loops)};
}

std::optional<ElementSet> FindFailureSet(const MatroidOracle& m,
                                         const ElementSet& set, int k,
                                         int target_rank) {
  CheckK(k);
  CheckInRange(set, m.ground_size());
  const std::size_t n = set.size();
  const std::size_t fail = std::min(static_cast<std::size_t>(k), n);
  std::optional<ElementSet> witness;
  std::vector<ElementId> rest;
  rest.reserve(n);
  ForEachCombination(n, fail, [&](std::span<const std::size_t> pos) {
    rest.clear();
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (next < pos.size() && pos[next] == i) {
        ++next;
        continue;
      }
      rest.push_back(set[i]);
    }
    if (static_cast<int>(GreedyScan(m, rest).size()) >= target_rank) {
      return true;
    }
    std::vector<ElementId> f;
    for (std::size_t p : pos) f.push_back(set[p]);
    witness = ElementSet::FromSorted(std::move(f));
    return false;
  });
  return witness;
}

bool IsFaultTolerant(const MatroidOracle& m, const ElementSet& set, int k,
                     int full_rank) {
  return !FindFailureSet(m, set, k, full_rank).has_value();
}

bool IsFaultTolerant(const MatroidOracle& m, const ElementSet& set, int k) {
  CheckInRange(set, m.ground_size());
  return IsFaultTolerant(m, set, k, static_cast<int>(FindBasis(m).size()));
}

bool IsHUniform(const MatroidOracle& m, const ElementSet& set, int h) {
  if (h < 1) throw InputError("h-uniformity needs h >= 1");
  if (Rank(m, set) != h) return false;
  std::vector<ElementId> subset(static_cast<std::size_t>(h));
  return ForEachCombination(
      set.size(), static_cast<std::size_t>(h),
      [&](std::span<const std::size_t> pos) {
        for (std::size_t i = 0; i < pos.size(); ++i) subset[i] = set[pos[i]];
        return m.IsIndependent(subset);
      });
}

std::pair<int, int> SizeBounds(int rank, int k) {
  if (rank < 1) {
    throw InputError(
        "size bounds need rank >= 1; for rank 0 the empty set is the only "
        "solution");
  }
  CheckK(k);
  return {rank + k, (k + 1) * rank};
}

}  // namespace ftbasis
