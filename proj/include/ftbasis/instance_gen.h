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

#ifndef FTBASIS_INSTANCE_GEN_H_
#define FTBASIS_INSTANCE_GEN_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ftbasis/instance.h"

namespace ftbasis {

// Name recorded in every seeded instance. Bounded draws use rejection
// sampling on raw std::mt19937_64 output (not std::uniform_int_distribution,
// whose algorithm is implementation-defined), so corpora are reproducible
// across standard libraries.
inline constexpr char kPrngName[] = "mt19937_64+rejection/1";

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound). bound > 0.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi);
  bool Chance(int percent) { return Below(100) < static_cast<unsigned>(percent); }

 private:
  std::mt19937_64 engine_;
};

// Families: tight, uniform, graphic-cycle, graphic-complete, random-graphic,
// random-gf2, random-rational, random-partition, random-transversal,
// general-position. Missing parameters fall back to documented defaults
// (see README); unknown families or out-of-range parameters throw
// InputError. A "maxw" parameter adds random weights in [0, maxw].
struct GenSpec {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;
};

// Scaled standard basis vectors j e_i, 1 <= i <= r, 1 <= j <= n (grouped by
// i). Every k-fault-tolerant basis needs k + 1 multiples of each e_i, so
// the optimum is exactly (k + 1) r. Requires r >= 1 and 0 <= k < n.
Instance GenTight(int r, int k, int n);

using Point = std::pair<mpq_class, mpq_class>;

struct GeneralPositionInstance {
  Instance instance;
  int k = 0;
  // A k-fault-tolerant basis of this size exists iff some p of the points
  // are in general position.
  int target_size = 0;
};

// Lifts each point (x, y) to (x, y, 1, 0, ..., 0) in dimension pad_to_rank,
// sets k = p - 3 and, for every extra dimension i > 3, appends k + 1 copies
// of the unit vector e_i. Target size: p + (pad_to_rank - 3)(k + 1).
// Requires p >= 3, pad_to_rank >= 3 and pairwise distinct points.
GeneralPositionInstance GenGeneralPosition(const std::vector<Point>& points,
                                           int p, int pad_to_rank);

Instance GenRandom(const GenSpec& spec);

}  // namespace ftbasis

#endif  // FTBASIS_INSTANCE_GEN_H_
