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

#ifndef FTBASIS_ELEMENT_SET_H_
#define FTBASIS_ELEMENT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftbasis {

// Index of a ground-set element, 0 <= id < ground size.
using ElementId = std::int32_t;

// Bad caller input: out-of-range ids, malformed payloads, violated
// preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search would exceed its configured enumeration budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite set of element ids. Members are unique and always iterate in
// ascending order.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);
  // Sorts and deduplicates.
  explicit ElementSet(std::vector<ElementId> ids);

  // Caller guarantees `ids` is strictly ascending.
  static ElementSet FromSorted(std::vector<ElementId> ids);
  // {0, 1, ..., n-1}.
  static ElementSet Range(ElementId n);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  ElementId operator[](std::size_t i) const { return ids_[i]; }
  ElementId front() const { return ids_.front(); }
  ElementId back() const { return ids_.back(); }
  std::span<const ElementId> ids() const { return ids_; }
  const std::vector<ElementId>& vector() const { return ids_; }

  bool contains(ElementId id) const;
  // Returns false if already present.
  bool insert(ElementId id);
  bool erase(ElementId id);

  ElementSet With(ElementId id) const;
  ElementSet Without(ElementId id) const;
  ElementSet Union(const ElementSet& other) const;
  ElementSet Intersection(const ElementSet& other) const;
  ElementSet Difference(const ElementSet& other) const;
  bool IsSubsetOf(const ElementSet& other) const;

  std::string ToString() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  // Shorter sets first, then lexicographic. This is the order in which the
  // window searches visit candidates.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

 private:
  std::vector<ElementId> ids_;
};

// Throws InputError unless every member lies in [0, ground_size).
void CheckInRange(const ElementSet& set, ElementId ground_size);

}  // namespace ftbasis

#endif  // FTBASIS_ELEMENT_SET_H_
