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

#include "ftbasis/subset_search.h"

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

#include "ftbasis/combinations.h"

namespace ftbasis {
namespace {

constexpr std::size_t kBatchSize = 2048;

[[noreturn]] void ThrowBudget(std::uint64_t budget) {
  throw ResourceError("enumeration budget of " + std::to_string(budget) +
                      " subsets exceeded");
}

// Yields the window's subsets in visiting order, in batches.
class WindowCursor {
 public:
  WindowCursor(const ElementSet& pool, int lo, int hi)
      : pool_(pool),
        size_(std::max(lo, 0)),
        hi_(std::min<int>(hi, static_cast<int>(pool.size()))) {
    Reset();
  }

  // Fills `batch` with up to `limit` subsets. Returns false when exhausted.
  bool Next(std::vector<ElementSet>& batch, std::size_t limit) {
    batch.clear();
    while (batch.size() < limit && size_ <= hi_) {
      std::vector<ElementId> ids;
      ids.reserve(positions_.size());
      for (std::size_t p : positions_) ids.push_back(pool_[p]);
      batch.push_back(ElementSet::FromSorted(std::move(ids)));
      if (!NextCombination(positions_, pool_.size())) {
        ++size_;
        Reset();
      }
    }
    return !batch.empty();
  }

 private:
  void Reset() {
    if (size_ > hi_) return;
    positions_.resize(static_cast<std::size_t>(size_));
    std::iota(positions_.begin(), positions_.end(), std::size_t{0});
  }

  const ElementSet& pool_;
  int size_;
  int hi_;
  std::vector<std::size_t> positions_;
};

// verdict[i] = feasible(batch[i]); partitions the batch across threads.
void EvaluateBatch(const std::vector<ElementSet>& batch,
                   const FeasibilityTest& feasible, int threads,
                   std::vector<char>& verdict) {
  verdict.assign(batch.size(), 0);
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)),
                            batch.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      verdict[i] = feasible(batch[i]) ? 1 : 0;
    }
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < batch.size(); i += workers) {
        verdict[i] = feasible(batch[i]) ? 1 : 0;
      }
    });
  }
}

}  // namespace

std::optional<ElementSet> FirstFeasibleInWindow(const ElementSet& pool, int lo,
                                                int hi,
                                                const FeasibilityTest& feasible,
                                                const SearchOptions& options,
                                                std::uint64_t& examined) {
  WindowCursor cursor(pool, lo, hi);
  std::vector<ElementSet> batch;
  std::vector<char> verdict;
  const std::size_t batch_limit = options.threads > 1 ? kBatchSize : 1;
  while (cursor.Next(batch, batch_limit)) {
    if (examined + batch.size() > options.budget) ThrowBudget(options.budget);
    EvaluateBatch(batch, feasible, options.threads, verdict);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (verdict[i]) {
        examined += options.threads > 1 ? batch.size() : i + 1;
        return batch[i];
      }
    }
    examined += batch.size();
  }
  return std::nullopt;
}

std::optional<ElementSet> MinWeightFeasibleInWindow(
    const ElementSet& pool, int lo, int hi, const FeasibilityTest& feasible,
    const WeightMap& weights, const SearchOptions& options,
    std::uint64_t& examined) {
  WindowCursor cursor(pool, lo, hi);
  std::vector<ElementSet> batch;
  std::vector<char> verdict;
  std::optional<ElementSet> best;
  std::int64_t best_weight = 0;
  while (cursor.Next(batch, kBatchSize)) {
    if (examined + batch.size() > options.budget) ThrowBudget(options.budget);
    EvaluateBatch(batch, feasible, options.threads, verdict);
    examined += batch.size();
    // Batches arrive in visiting order, so strict improvement keeps the
    // earliest subset among equal weights.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!verdict[i]) continue;
      const std::int64_t w = weights.Total(batch[i]);
      if (!best || w < best_weight) {
        best = batch[i];
        best_weight = w;
      }
    }
  }
  return best;
}

}  // namespace ftbasis
