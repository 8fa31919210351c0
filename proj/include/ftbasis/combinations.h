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

#ifndef FTBASIS_COMBINATIONS_H_
#define FTBASIS_COMBINATIONS_H_

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace ftbasis {

// Steps `positions` (a strictly increasing choice of m indices out of n) to
// the lexicographically next choice. Returns false after the last one.
inline bool NextCombination(std::vector<std::size_t>& positions,
                            std::size_t n) {
  const std::size_t m = positions.size();
  std::size_t i = m;
  while (i > 0) {
    --i;
    if (positions[i] < n - m + i) {
      ++positions[i];
      for (std::size_t j = i + 1; j < m; ++j) {
        positions[j] = positions[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

// Calls `visit(positions)` for every m-subset of {0..n-1} in lexicographic
// order until it returns false. Returns false iff stopped early.
template <typename Visit>
bool ForEachCombination(std::size_t n, std::size_t m, Visit&& visit) {
  if (m > n) return true;
  std::vector<std::size_t> positions(m);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  do {
    if (!visit(std::span<const std::size_t>(positions))) return false;
  } while (NextCombination(positions, n));
  return true;
}

}  // namespace ftbasis

#endif  // FTBASIS_COMBINATIONS_H_
