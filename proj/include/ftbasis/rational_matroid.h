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

#ifndef FTBASIS_RATIONAL_MATROID_H_
#define FTBASIS_RATIONAL_MATROID_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "ftbasis/matroid.h"

namespace ftbasis {

using RationalColumn = std::vector<mpq_class>;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws InputError on
// malformed text or a zero denominator.
mpq_class ParseRational(const std::string& text);

// Exact rank of the columns selected by `ids`. Each column is scaled to an
// integer vector and the matrix is reduced with fraction-free (Bareiss)
// elimination, so no inexact arithmetic is involved.
int RationalRank(std::span<const RationalColumn> columns,
                 std::span<const ElementId> ids);

// Linear matroid over the rationals, one column per element.
class LinearRationalMatroid final : public MatroidOracle {
 public:
  LinearRationalMatroid(int dimension, std::vector<RationalColumn> columns);

  int dimension() const { return dimension_; }
  const std::vector<RationalColumn>& columns() const { return columns_; }
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(std::span<const ElementId> ids) const override;

 private:
  int dimension_;
  std::vector<RationalColumn> columns_;
};

}  // namespace ftbasis

#endif  // FTBASIS_RATIONAL_MATROID_H_
