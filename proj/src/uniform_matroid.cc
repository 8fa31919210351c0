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

#include "ftbasis/uniform_matroid.h"

namespace ftbasis {

UniformMatroid::UniformMatroid(int rank, int n)
    : MatroidOracle(n), rank_(rank) {
  if (rank < 0 || rank > n) {
    throw InputError("uniform matroid needs 0 <= r <= n, got r = " +
                     std::to_string(rank) + ", n = " + std::to_string(n));
  }
}

std::string UniformMatroid::Describe() const {
  return "uniform matroid U_{" + std::to_string(rank_) + "," +
         std::to_string(ground_size()) + "}";
}

}  // namespace ftbasis
