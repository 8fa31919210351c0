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

#ifndef FTBASIS_SOLVE_REPORT_H_
#define FTBASIS_SOLVE_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftbasis/element_set.h"

namespace ftbasis {

// Nonnegative integer weight per element. Individual weights are limited to
// 32 bits so that totals over any realistic ground set fit in 64 bits.
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::vector<std::int64_t> weights);
  static WeightMap Unit(ElementId n);

  std::size_t size() const { return weights_.size(); }
  std::int64_t operator[](ElementId e) const { return weights_[e]; }
  std::int64_t Total(const ElementSet& set) const;
  const std::vector<std::int64_t>& values() const { return weights_; }

 private:
  std::vector<std::int64_t> weights_;
};

inline constexpr std::int64_t kMaxWeight = 0xFFFFFFFFLL;

struct SolveStats {
  std::uint64_t oracle_calls = 0;
  std::uint64_t subsets_examined = 0;
  double wall_ms = 0.0;
  std::string solver;
};

// Outcome of any solver. `exists` is false exactly when no k-fault-tolerant
// set exists; a present solution has already passed the solver's own
// feasibility check.
struct SolveReport {
  bool exists = false;
  std::optional<ElementSet> solution;
  std::optional<std::int64_t> weight;
  SolveStats stats;

  std::optional<std::size_t> size() const {
    if (!solution) return std::nullopt;
    return solution->size();
  }
};

struct SearchOptions {
  // Upper limit on candidate subsets a window search may examine.
  std::uint64_t budget = std::uint64_t{1} << 24;
  // Worker threads for candidate verification. Results do not depend on it.
  int threads = 1;
};

}  // namespace ftbasis

#endif  // FTBASIS_SOLVE_REPORT_H_
