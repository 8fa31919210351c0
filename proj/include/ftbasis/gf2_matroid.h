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

#ifndef FTBASIS_GF2_MATROID_H_
#define FTBASIS_GF2_MATROID_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ftbasis/matroid.h"

namespace ftbasis {

// Column vector over GF(2), packed 64 coordinates per word. Bit i of the
// column is coordinate i.
class BitColumn {
 public:
  BitColumn() = default;
  explicit BitColumn(int dimension);
  // '0'/'1' characters, coordinate 0 first. Throws InputError otherwise.
  static BitColumn FromString(const std::string& bits);

  int dimension() const { return dimension_; }
  bool get(int i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(int i, bool value);
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::string ToString() const;

  friend bool operator==(const BitColumn&, const BitColumn&) = default;

 private:
  int dimension_ = 0;
  std::vector<std::uint64_t> words_;
};

// Rank over GF(2) of the columns selected by `ids`.
int Gf2Rank(std::span<const BitColumn> columns, std::span<const ElementId> ids);

// Binary matroid represented by GF(2) columns, one per element.
class LinearGf2Matroid final : public MatroidOracle {
 public:
  LinearGf2Matroid(int dimension, std::vector<BitColumn> columns);

  int dimension() const { return dimension_; }
  const std::vector<BitColumn>& columns() const { return columns_; }
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(std::span<const ElementId> ids) const override;

 private:
  int dimension_;
  std::vector<BitColumn> columns_;
};

}  // namespace ftbasis

#endif  // FTBASIS_GF2_MATROID_H_
