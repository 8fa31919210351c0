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

#include "ftbasis/instance.h"

#include <fstream>
#include <limits>
#include <sstream>

#include "ftbasis/partition_matroid.h"
#include "ftbasis/solve_report.h"
#include "ftbasis/transversal_matroid.h"
#include "ftbasis/uniform_matroid.h"

namespace ftbasis {
namespace {

using nlohmann::json;

// A JSON value together with its JSON-pointer path, for error messages.
class Field {
 public:
  Field(const json& value, std::string path)
      : value_(value), path_(std::move(path)) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw InputError("instance field " + (path_.empty() ? "/" : path_) + ": " +
                     what);
  }

  bool Has(const std::string& key) const {
    return value_.is_object() && value_.contains(key);
  }

  Field At(const std::string& key) const {
    if (!value_.is_object()) Fail("expected an object");
    if (!value_.contains(key)) Fail("missing field \"" + key + "\"");
    return Field(value_.at(key), path_ + "/" + key);
  }

  std::vector<Field> Items() const {
    if (!value_.is_array()) Fail("expected an array");
    std::vector<Field> items;
    for (std::size_t i = 0; i < value_.size(); ++i) {
      items.emplace_back(value_[i], path_ + "/" + std::to_string(i));
    }
    return items;
  }

  std::int64_t Int(std::int64_t lo = std::numeric_limits<std::int64_t>::min(),
                   std::int64_t hi =
                       std::numeric_limits<std::int64_t>::max()) const {
    if (!value_.is_number_integer()) Fail("expected an integer");
    std::int64_t v;
    if (value_.is_number_unsigned()) {
      const auto u = value_.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(hi)) Fail("integer out of range");
      v = static_cast<std::int64_t>(u);
    } else {
      v = value_.get<std::int64_t>();
    }
    if (v < lo || v > hi) {
      Fail("value " + std::to_string(v) + " outside [" + std::to_string(lo) +
           ", " + std::to_string(hi) + "]");
    }
    return v;
  }

  int Int32(int lo = 0, int hi = std::numeric_limits<int>::max()) const {
    return static_cast<int>(Int(lo, hi));
  }

  std::string String() const {
    if (!value_.is_string()) Fail("expected a string");
    return value_.get<std::string>();
  }

  const std::string& path() const { return path_; }

 private:
  const json& value_;
  std::string path_;
};

constexpr int kMaxSize = std::numeric_limits<ElementId>::max();

Gf2Payload ParseGf2(const Field& payload) {
  Gf2Payload out;
  out.dimension = payload.At("dimension").Int32(0, kMaxSize);
  for (const Field& col : payload.At("columns").Items()) {
    const std::string bits = col.String();
    if (bits.size() != static_cast<std::size_t>(out.dimension)) {
      col.Fail("column has " + std::to_string(bits.size()) +
               " bits, dimension is " + std::to_string(out.dimension));
    }
    try {
      out.columns.push_back(BitColumn::FromString(bits));
    } catch (const InputError& e) {
      col.Fail(e.what());
    }
  }
  return out;
}

RationalPayload ParseRationalPayload(const Field& payload) {
  RationalPayload out;
  out.dimension = payload.At("dimension").Int32(0, kMaxSize);
  for (const Field& col : payload.At("columns").Items()) {
    const std::vector<Field> entries = col.Items();
    if (entries.size() != static_cast<std::size_t>(out.dimension)) {
      col.Fail("column has " + std::to_string(entries.size()) +
               " entries, dimension is " + std::to_string(out.dimension));
    }
    RationalColumn column;
    for (const Field& entry : entries) {
      try {
        column.push_back(ParseRational(entry.String()));
      } catch (const InputError& e) {
        entry.Fail(e.what());
      }
    }
    out.columns.push_back(std::move(column));
  }
  return out;
}

GraphicPayload ParseGraphic(const Field& payload) {
  GraphicPayload out;
  out.vertex_count = payload.At("vertex_count").Int32(0, kMaxSize);
  const int max_vertex = std::max(out.vertex_count - 1, 0);
  for (const Field& edge : payload.At("edges").Items()) {
    const std::vector<Field> ends = edge.Items();
    if (ends.size() != 2) edge.Fail("an edge needs exactly two endpoints");
    if (out.vertex_count == 0) edge.Fail("graph has no vertices");
    out.edges.emplace_back(ends[0].Int32(0, max_vertex),
                           ends[1].Int32(0, max_vertex));
  }
  return out;
}

PartitionPayload ParsePartition(const Field& payload) {
  PartitionPayload out;
  const std::vector<Field> blocks = payload.At("blocks").Items();
  std::vector<std::vector<Field>> members;
  std::size_t n = 0;
  for (const Field& block : blocks) {
    members.push_back(block.Items());
    n += members.back().size();
  }
  std::vector<char> seen(n, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<ElementId> ids;
    for (const Field& member : members[b]) {
      const int e = member.Int32(0, static_cast<int>(n) - 1);
      if (seen[e]) member.Fail("element " + std::to_string(e) +
                               " appears in more than one block");
      seen[e] = 1;
      ids.push_back(e);
    }
    out.blocks.emplace_back(std::move(ids));
  }
  const std::vector<Field> caps = payload.At("capacities").Items();
  if (caps.size() != blocks.size()) {
    payload.At("capacities")
        .Fail(std::to_string(caps.size()) + " capacities for " +
              std::to_string(blocks.size()) + " blocks");
  }
  for (const Field& cap : caps) out.capacities.push_back(cap.Int32(1));
  return out;
}

UniformPayload ParseUniform(const Field& payload) {
  UniformPayload out;
  out.n = payload.At("n").Int32(0, kMaxSize);
  out.r = payload.At("r").Int32(0, out.n);
  return out;
}

TransversalPayload ParseTransversal(const Field& payload) {
  TransversalPayload out;
  out.target_count = payload.At("target_count").Int32(0, kMaxSize);
  for (const Field& row : payload.At("adjacency").Items()) {
    std::vector<int> targets;
    for (const Field& t : row.Items()) {
      if (out.target_count == 0) t.Fail("there are no target positions");
      targets.push_back(t.Int32(0, out.target_count - 1));
    }
    out.adjacency.push_back(std::move(targets));
  }
  return out;
}

struct PayloadJson {
  json operator()(const Gf2Payload& p) const {
    json cols = json::array();
    for (const BitColumn& c : p.columns) cols.push_back(c.ToString());
    return {{"dimension", p.dimension}, {"columns", cols}};
  }
  json operator()(const RationalPayload& p) const {
    json cols = json::array();
    for (const RationalColumn& c : p.columns) {
      json entries = json::array();
      for (mpq_class q : c) {
        q.canonicalize();
        entries.push_back(q.get_str());
      }
      cols.push_back(entries);
    }
    return {{"dimension", p.dimension}, {"columns", cols}};
  }
  json operator()(const GraphicPayload& p) const {
    json edges = json::array();
    for (const Edge& e : p.edges) edges.push_back({e.first, e.second});
    return {{"vertex_count", p.vertex_count}, {"edges", edges}};
  }
  json operator()(const PartitionPayload& p) const {
    json blocks = json::array();
    for (const ElementSet& b : p.blocks) blocks.push_back(b.vector());
    return {{"blocks", blocks}, {"capacities", p.capacities}};
  }
  json operator()(const UniformPayload& p) const {
    return {{"n", p.n}, {"r", p.r}};
  }
  json operator()(const TransversalPayload& p) const {
    return {{"target_count", p.target_count}, {"adjacency", p.adjacency}};
  }
};

struct PayloadSize {
  ElementId operator()(const Gf2Payload& p) const {
    return static_cast<ElementId>(p.columns.size());
  }
  ElementId operator()(const RationalPayload& p) const {
    return static_cast<ElementId>(p.columns.size());
  }
  ElementId operator()(const GraphicPayload& p) const {
    return static_cast<ElementId>(p.edges.size());
  }
  ElementId operator()(const PartitionPayload& p) const {
    std::size_t n = 0;
    for (const ElementSet& b : p.blocks) n += b.size();
    return static_cast<ElementId>(n);
  }
  ElementId operator()(const UniformPayload& p) const { return p.n; }
  ElementId operator()(const TransversalPayload& p) const {
    return static_cast<ElementId>(p.adjacency.size());
  }
};

struct OracleBuilder {
  std::unique_ptr<MatroidOracle> operator()(const Gf2Payload& p) const {
    return std::make_unique<LinearGf2Matroid>(p.dimension, p.columns);
  }
  std::unique_ptr<MatroidOracle> operator()(const RationalPayload& p) const {
    return std::make_unique<LinearRationalMatroid>(p.dimension, p.columns);
  }
  std::unique_ptr<MatroidOracle> operator()(const GraphicPayload& p) const {
    return std::make_unique<GraphicMatroid>(p.vertex_count, p.edges);
  }
  std::unique_ptr<MatroidOracle> operator()(const PartitionPayload& p) const {
    return std::make_unique<PartitionMatroid>(p.blocks, p.capacities);
  }
  std::unique_ptr<MatroidOracle> operator()(const UniformPayload& p) const {
    return std::make_unique<UniformMatroid>(p.r, p.n);
  }
  std::unique_ptr<MatroidOracle> operator()(
      const TransversalPayload& p) const {
    return std::make_unique<TransversalMatroid>(p.target_count, p.adjacency);
  }
};

}  // namespace

std::string_view Instance::kind() const {
  static constexpr std::string_view kNames[] = {
      "linear_gf2", "linear_rational", "graphic",
      "partition",  "uniform",         "transversal"};
  return kNames[payload.index()];
}

ElementId Instance::ground_size() const {
  return std::visit(PayloadSize{}, payload);
}

json ToJson(const Instance& instance) {
  json out = {{"version", kInstanceVersion},
              {"kind", instance.kind()},
              {"payload", std::visit(PayloadJson{}, instance.payload)}};
  if (instance.weights) out["weights"] = *instance.weights;
  if (instance.generator) {
    const GeneratorInfo& g = *instance.generator;
    out["generator"] = {{"family", g.family},
                        {"prng", g.prng},
                        {"seed", g.seed},
                        {"params", g.params}};
  }
  if (instance.k_hint || instance.size_hint) {
    json meta = json::object();
    if (instance.k_hint) meta["k"] = *instance.k_hint;
    if (instance.size_hint) meta["b"] = *instance.size_hint;
    out["meta"] = meta;
  }
  return out;
}

Instance InstanceFromJson(const json& doc) {
  const Field root(doc, "");
  const std::string version = root.At("version").String();
  if (version != kInstanceVersion) {
    root.At("version").Fail("unsupported version \"" + version +
                            "\", expected \"" +
                            std::string(kInstanceVersion) + "\"");
  }
  Instance out;
  const std::string kind = root.At("kind").String();
  const Field payload = root.At("payload");
  if (kind == "linear_gf2") {
    out.payload = ParseGf2(payload);
  } else if (kind == "linear_rational") {
    out.payload = ParseRationalPayload(payload);
  } else if (kind == "graphic") {
    out.payload = ParseGraphic(payload);
  } else if (kind == "partition") {
    out.payload = ParsePartition(payload);
  } else if (kind == "uniform") {
    out.payload = ParseUniform(payload);
  } else if (kind == "transversal") {
    out.payload = ParseTransversal(payload);
  } else {
    root.At("kind").Fail("unknown kind \"" + kind + "\"");
  }

  if (root.Has("weights")) {
    const Field weights = root.At("weights");
    std::vector<std::int64_t> values;
    for (const Field& w : weights.Items()) values.push_back(w.Int(0, kMaxWeight));
    if (values.size() != static_cast<std::size_t>(out.ground_size())) {
      weights.Fail(std::to_string(values.size()) + " weights for " +
                   std::to_string(out.ground_size()) + " elements");
    }
    out.weights = std::move(values);
  }
  if (root.Has("generator")) {
    const Field gen = root.At("generator");
    GeneratorInfo info;
    info.family = gen.At("family").String();
    info.prng = gen.At("prng").String();
    info.seed = static_cast<std::uint64_t>(
        gen.At("seed").Int(0));
    const Field params = gen.At("params");
    const json& raw = doc.at("generator").at("params");
    if (!raw.is_object()) params.Fail("expected an object");
    for (const auto& [key, value] : raw.items()) {
      info.params[key] = params.At(key).Int();
    }
    out.generator = std::move(info);
  }
  if (root.Has("meta")) {
    const Field meta = root.At("meta");
    if (meta.Has("k")) out.k_hint = meta.At("k").Int32(0);
    if (meta.Has("b")) out.size_hint = meta.At("b").Int32(0);
  }
  return out;
}

std::string SerializeInstance(const Instance& instance) {
  return ToJson(instance).dump(2) + "\n";
}

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  return InstanceFromJson(doc);
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read instance file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseInstance(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write instance file " + path);
  out << SerializeInstance(instance);
}

std::unique_ptr<MatroidOracle> BuildOracle(const Instance& instance) {
  return std::visit(OracleBuilder{}, instance.payload);
}

}  // namespace ftbasis
