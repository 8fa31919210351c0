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

#include "ftbasis/views.h"

namespace ftbasis {
namespace {

ElementId SurvivorCount(const MatroidOracle& base, const ElementSet& removed) {
  CheckInRange(removed, base.ground_size());
  return base.ground_size() - static_cast<ElementId>(removed.size());
}

}  // namespace

DeletionView::DeletionView(const MatroidOracle& base, const ElementSet& removed)
    : MatroidOracle(SurvivorCount(base, removed)),
      base_(base),
      from_base_(static_cast<std::size_t>(base.ground_size()), -1) {
  to_base_.reserve(static_cast<std::size_t>(ground_size()));
  for (ElementId e = 0; e < base.ground_size(); ++e) {
    if (removed.contains(e)) continue;
    from_base_[e] = static_cast<ElementId>(to_base_.size());
    to_base_.push_back(e);
  }
}

ElementSet DeletionView::ToBase(const ElementSet& view_set) const {
  CheckInRange(view_set, ground_size());
  std::vector<ElementId> out;
  out.reserve(view_set.size());
  // to_base_ is increasing, so the image stays sorted.
  for (ElementId e : view_set) out.push_back(to_base_[e]);
  return ElementSet::FromSorted(std::move(out));
}

ElementSet DeletionView::FromBase(const ElementSet& base_set) const {
  CheckInRange(base_set, base_.ground_size());
  std::vector<ElementId> out;
  out.reserve(base_set.size());
  for (ElementId e : base_set) {
    if (from_base_[e] < 0) {
      throw InputError("element " + std::to_string(e) +
                       " was deleted from this view");
    }
    out.push_back(from_base_[e]);
  }
  return ElementSet::FromSorted(std::move(out));
}

std::string DeletionView::Describe() const {
  return "deletion of " +
         std::to_string(base_.ground_size() - ground_size()) +
         " elements from " + base_.Describe();
}

bool DeletionView::IsIndependentImpl(std::span<const ElementId> ids) const {
  std::vector<ElementId> mapped;
  mapped.reserve(ids.size());
  for (ElementId e : ids) mapped.push_back(to_base_[e]);
  return base_.IsIndependent(mapped);
}

TruncationView::TruncationView(const MatroidOracle& base, int rank_cap)
    : MatroidOracle(base.ground_size()), base_(base), rank_cap_(rank_cap) {
  if (rank_cap < 0) throw InputError("truncation rank must be >= 0");
}

std::string TruncationView::Describe() const {
  return std::to_string(rank_cap_) + "-truncation of " + base_.Describe();
}

bool TruncationView::IsIndependentImpl(std::span<const ElementId> ids) const {
  if (ids.size() > static_cast<std::size_t>(rank_cap_)) return false;
  return base_.IsIndependent(ids);
}

}  // namespace ftbasis
