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

#ifndef FTBASIS_VIEWS_H_
#define FTBASIS_VIEWS_H_

#include <string>
#include <vector>

#include "ftbasis/element_set.h"
#include "ftbasis/matroid.h"

namespace ftbasis {

// M - S. Lazy: queries are translated and forwarded to the base oracle,
// which must outlive the view. Surviving elements are re-indexed densely in
// ascending order of their base ids.
class DeletionView final : public MatroidOracle {
 public:
  DeletionView(const MatroidOracle& base, const ElementSet& removed);

  // View id -> base id.
  ElementId ToBase(ElementId view_id) const { return to_base_[view_id]; }
  ElementSet ToBase(const ElementSet& view_set) const;
  // Base id -> view id, or -1 for removed elements.
  ElementId FromBase(ElementId base_id) const { return from_base_[base_id]; }
  // Throws InputError if the set touches a removed element.
  ElementSet FromBase(const ElementSet& base_set) const;

  const MatroidOracle& base() const { return base_; }
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(std::span<const ElementId> ids) const override;

 private:
  const MatroidOracle& base_;
  std::vector<ElementId> to_base_;
  std::vector<ElementId> from_base_;
};

// r-truncation: independent iff independent in the base and of size <= r.
// The base oracle must outlive the view.
class TruncationView final : public MatroidOracle {
 public:
  TruncationView(const MatroidOracle& base, int rank_cap);

  int rank_cap() const { return rank_cap_; }
  std::string Describe() const override;

 protected:
  bool IsIndependentImpl(std::span<const ElementId> ids) const override;

 private:
  const MatroidOracle& base_;
  int rank_cap_;
};

}  // namespace ftbasis

#endif  // FTBASIS_VIEWS_H_
