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

#include "ftbasis/element_set.h"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace ftbasis {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(std::vector<ElementId>(ids)) {}

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet ElementSet::FromSorted(std::vector<ElementId> ids) {
  ElementSet set;
  set.ids_ = std::move(ids);
  return set;
}

ElementSet ElementSet::Range(ElementId n) {
  std::vector<ElementId> ids(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(ids.begin(), ids.end(), 0);
  return FromSorted(std::move(ids));
}

bool ElementSet::contains(ElementId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool ElementSet::insert(ElementId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) return false;
  ids_.insert(it, id);
  return true;
}

bool ElementSet::erase(ElementId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return false;
  ids_.erase(it);
  return true;
}

ElementSet ElementSet::With(ElementId id) const {
  ElementSet out = *this;
  out.insert(id);
  return out;
}

ElementSet ElementSet::Without(ElementId id) const {
  ElementSet out = *this;
  out.erase(id);
  return out;
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  std::vector<ElementId> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

ElementSet ElementSet::Intersection(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

ElementSet ElementSet::Difference(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(ids_[i]);
  }
  out += "}";
  return out;
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.ids_ < b.ids_;
}

void CheckInRange(const ElementSet& set, ElementId ground_size) {
  if (set.empty()) return;
  if (set.front() < 0 || set.back() >= ground_size) {
    throw InputError("element id out of range: set " + set.ToString() +
                     " on a ground set of size " +
                     std::to_string(ground_size));
  }
}

}  // namespace ftbasis
