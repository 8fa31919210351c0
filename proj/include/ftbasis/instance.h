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

#ifndef FTBASIS_INSTANCE_H_
#define FTBASIS_INSTANCE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ftbasis/element_set.h"
#include "ftbasis/gf2_matroid.h"
#include "ftbasis/graphic_matroid.h"
#include "ftbasis/matroid.h"
#include "ftbasis/rational_matroid.h"

namespace ftbasis {

inline constexpr std::string_view kInstanceVersion = "ftb-instance/1";

struct Gf2Payload {
  int dimension = 0;
  std::vector<BitColumn> columns;
};

struct RationalPayload {
  int dimension = 0;
  std::vector<RationalColumn> columns;
};

struct GraphicPayload {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

struct PartitionPayload {
  std::vector<ElementSet> blocks;
  std::vector<int> capacities;
};

struct UniformPayload {
  int n = 0;
  int r = 0;
};

struct TransversalPayload {
  int target_count = 0;
  std::vector<std::vector<int>> adjacency;
};

using Payload = std::variant<Gf2Payload, RationalPayload, GraphicPayload,
                             PartitionPayload, UniformPayload,
                             TransversalPayload>;

// Provenance of generated instances.
struct GeneratorInfo {
  std::string family;
  std::string prng;
  std::uint64_t seed = 0;
  std::map<std::string, std::int64_t> params;
};

// Serializable description of a concrete matroid.
struct Instance {
  Payload payload;
  std::optional<std::vector<std::int64_t>> weights;
  std::optional<GeneratorInfo> generator;
  // Suggested k and target size, carried by generated benchmark instances.
  std::optional<int> k_hint;
  std::optional<int> size_hint;

  // "linear_gf2", "linear_rational", "graphic", "partition", "uniform" or
  // "transversal".
  std::string_view kind() const;
  ElementId ground_size() const;
};

nlohmann::json ToJson(const Instance& instance);
// Validates every field; InputError messages name the offending JSON path.
Instance InstanceFromJson(const nlohmann::json& json);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string SerializeInstance(const Instance& instance);
// JSON syntax errors are reported with line and column.
Instance ParseInstance(std::string_view text);

Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& instance, const std::string& path);

std::unique_ptr<MatroidOracle> BuildOracle(const Instance& instance);

}  // namespace ftbasis

#endif  // FTBASIS_INSTANCE_H_
