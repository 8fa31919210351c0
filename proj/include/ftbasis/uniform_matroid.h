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

#ifndef FTBASIS_UNIFORM_MATROID_H_
#define FTBASIS_UNIFORM_MATROID_H_

#include <span>
#include <string>

#include "ftbasis/matroid.h"

namespace ftbasis {

// U_{r,n}: every set of at most r elements is independent.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(int rank, int n);

  int rank() const { return rank_; }
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(std::span<const ElementId> ids) const override {
    return ids.size() <= static_cast<std::size_t>(rank_);
  }

 private:
  int rank_;
};

}  // namespace ftbasis

#endif  // FTBASIS_UNIFORM_MATROID_H_
