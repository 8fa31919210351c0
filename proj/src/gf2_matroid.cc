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

#include "ftbasis/gf2_matroid.h"

#include <algorithm>
#include <bit>

namespace ftbasis {

BitColumn::BitColumn(int dimension)
    : dimension_(dimension),
      words_(static_cast<std::size_t>((dimension + 63) / 64), 0) {
  if (dimension < 0) throw InputError("negative GF(2) dimension");
}

BitColumn BitColumn::FromString(const std::string& bits) {
  BitColumn column(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw InputError("GF(2) column must contain only '0'/'1', got \"" +
                       bits + "\"");
    }
    column.set(static_cast<int>(i), bits[i] == '1');
  }
  return column;
}

void BitColumn::set(int i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

std::string BitColumn::ToString() const {
  std::string out(static_cast<std::size_t>(dimension_), '0');
  for (int i = 0; i < dimension_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

int Gf2Rank(std::span<const BitColumn> columns,
            std::span<const ElementId> ids) {
  // Insert each column into an echelon basis keyed by its lowest set bit.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<int> pivots;
  for (ElementId id : ids) {
    std::vector<std::uint64_t> v = columns[id].words();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int p = pivots[b];
      if ((v[p / 64] >> (p % 64)) & 1U) {
        for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= basis[b][w];
      }
    }
    int pivot = -1;
    for (std::size_t w = 0; w < v.size(); ++w) {
      if (v[w] != 0) {
        pivot = static_cast<int>(w * 64) + std::countr_zero(v[w]);
        break;
      }
    }
    if (pivot < 0) continue;
    // Keep the basis fully reduced on pivot columns so one pass suffices.
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if ((basis[b][pivot / 64] >> (pivot % 64)) & 1U) {
        for (std::size_t w = 0; w < v.size(); ++w) basis[b][w] ^= v[w];
      }
    }
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
  }
  return static_cast<int>(basis.size());
}

LinearGf2Matroid::LinearGf2Matroid(int dimension,
                                   std::vector<BitColumn> columns)
    : MatroidOracle(static_cast<ElementId>(columns.size())),
      dimension_(dimension),
      columns_(std::move(columns)) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].dimension() != dimension_) {
      throw InputError("GF(2) column " + std::to_string(i) + " has dimension " +
                       std::to_string(columns_[i].dimension()) +
                       ", expected " + std::to_string(dimension_));
    }
  }
}

std::string LinearGf2Matroid::Describe() const {
  return "linear GF(2) matroid, " + std::to_string(ground_size()) +
         " columns of dimension " + std::to_string(dimension_);
}

bool LinearGf2Matroid::IsIndependentImpl(
    std::span<const ElementId> ids) const {
  if (ids.size() > static_cast<std::size_t>(dimension_)) return false;
  return Gf2Rank(columns_, ids) == static_cast<int>(ids.size());
}

}  // namespace ftbasis
