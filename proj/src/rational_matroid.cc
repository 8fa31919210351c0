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

#include "ftbasis/rational_matroid.h"

#include <utility>

namespace ftbasis {

mpq_class ParseRational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw InputError("malformed rational literal \"" + text + "\"");
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) {
    throw InputError("malformed rational literal \"" + text + "\"");
  }
  mpq_class value;
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  if (value.set_str(body, 10) != 0) {
    throw InputError("malformed rational literal \"" + text + "\"");
  }
  if (value.get_den() == 0) {
    throw InputError("zero denominator in \"" + text + "\"");
  }
  value.canonicalize();
  return value;
}

int RationalRank(std::span<const RationalColumn> columns,
                 std::span<const ElementId> ids) {
  if (ids.empty()) return 0;
  const std::size_t rows = columns[ids[0]].size();
  const std::size_t cols = ids.size();
  // a[row][col], integer entries after clearing each column's denominators.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    const RationalColumn& column = columns[ids[c]];
    mpz_class scale = 1;
    for (const mpq_class& q : column) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              q.get_den_mpz_t());
    }
    for (std::size_t r = 0; r < rows; ++r) {
      a[r][c] = column[r].get_num() * (scale / column[r].get_den());
    }
  }

  std::size_t rank = 0;
  mpz_class prev_pivot = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && a[pivot_row][c] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(a[pivot_row], a[rank]);
    const mpz_class& pivot = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class value = pivot * a[r][j] - a[r][c] * a[rank][j];
        mpz_divexact(a[r][j].get_mpz_t(), value.get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return static_cast<int>(rank);
}

LinearRationalMatroid::LinearRationalMatroid(
    int dimension, std::vector<RationalColumn> columns)
    : MatroidOracle(static_cast<ElementId>(columns.size())),
      dimension_(dimension),
      columns_(std::move(columns)) {
  if (dimension < 0) throw InputError("negative rational dimension");
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].size() != static_cast<std::size_t>(dimension_)) {
      throw InputError("rational column " + std::to_string(i) + " has " +
                       std::to_string(columns_[i].size()) +
                       " entries, expected " + std::to_string(dimension_));
    }
  }
}

std::string LinearRationalMatroid::Describe() const {
  return "linear rational matroid, " + std::to_string(ground_size()) +
         " columns of dimension " + std::to_string(dimension_);
}

bool LinearRationalMatroid::IsIndependentImpl(
    std::span<const ElementId> ids) const {
  if (ids.size() > static_cast<std::size_t>(dimension_)) return false;
  return RationalRank(columns_, ids) == static_cast<int>(ids.size());
}

}  // namespace ftbasis
