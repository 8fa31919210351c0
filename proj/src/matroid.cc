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

#include "ftbasis/matroid.h"

namespace ftbasis {

MatroidOracle::MatroidOracle(ElementId ground_size)
    : ground_size_(ground_size) {
  if (ground_size < 0) throw InputError("negative ground set size");
}

}  // namespace ftbasis
