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

#ifndef FTBASIS_MATROID_H_
#define FTBASIS_MATROID_H_

#include <atomic>
#include <cstdint>
#include <span>
#include <string>

#include "ftbasis/element_set.h"

namespace ftbasis {

// A matroid on the ground set {0, ..., ground_size() - 1}, accessed only
// through independence queries.
//
// Implementations must be immutable after construction so that concurrent
// queries are safe. The query counter is the only mutable state; every
// oracle counts the queries addressed to it, including queries that views
// forward to an underlying oracle (the underlying oracle counts them too).
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  MatroidOracle(const MatroidOracle&) = delete;
  MatroidOracle& operator=(const MatroidOracle&) = delete;

  ElementId ground_size() const { return ground_size_; }

  // `ids` must be strictly ascending and in range. Not range-checked here;
  // the generic operations validate their inputs once up front.
  bool IsIndependent(std::span<const ElementId> ids) const {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return IsIndependentImpl(ids);
  }
  bool IsIndependent(const ElementSet& set) const {
    return IsIndependent(set.ids());
  }

  std::uint64_t oracle_calls() const {
    return calls_.load(std::memory_order_relaxed);
  }
  void ResetCallCounter() const { calls_.store(0, std::memory_order_relaxed); }

  virtual std::string Describe() const = 0;

 protected:
  explicit MatroidOracle(ElementId ground_size);

  virtual bool IsIndependentImpl(std::span<const ElementId> ids) const = 0;

 private:
  ElementId ground_size_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// Counts the queries issued to `oracle` while alive.
class CallMeter {
 public:
  explicit CallMeter(const MatroidOracle& oracle)
      : oracle_(oracle), start_(oracle.oracle_calls()) {}
  std::uint64_t calls() const { return oracle_.oracle_calls() - start_; }

 private:
  const MatroidOracle& oracle_;
  std::uint64_t start_;
};

}  // namespace ftbasis

#endif  // FTBASIS_MATROID_H_
