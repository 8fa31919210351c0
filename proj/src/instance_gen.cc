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

#include "ftbasis/instance_gen.h"

#include <limits>
#include <set>

namespace ftbasis {
namespace {

class Params {
 public:
  explicit Params(const GenSpec& spec) : spec_(spec) {}

  // Reads a parameter (or its default), checks its range and records it.
  int Get(const std::string& name, std::int64_t fallback, std::int64_t lo,
          std::int64_t hi = std::numeric_limits<int>::max()) {
    const auto it = spec_.params.find(name);
    const std::int64_t value = it == spec_.params.end() ? fallback : it->second;
    if (value < lo || value > hi) {
      throw InputError("family " + spec_.family + ": parameter " + name +
                       " = " + std::to_string(value) + " outside [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    used_[name] = value;
    return static_cast<int>(value);
  }

  bool Has(const std::string& name) const {
    return spec_.params.contains(name);
  }

  // Throws on parameters the family never read, which are usually typos.
  void CheckAllUsed() const {
    for (const auto& [name, value] : spec_.params) {
      if (!used_.contains(name)) {
        throw InputError("family " + spec_.family +
                         " has no parameter named " + name);
      }
    }
  }

  GeneratorInfo Info(bool seeded) const {
    return GeneratorInfo{spec_.family, seeded ? kPrngName : "none",
                         seeded ? spec_.seed : 0, used_};
  }

 private:
  const GenSpec& spec_;
  std::map<std::string, std::int64_t> used_;
};

RationalColumn UnitVector(int dimension, int axis, const mpq_class& scale) {
  RationalColumn column(static_cast<std::size_t>(dimension), mpq_class(0));
  column[axis] = scale;
  return column;
}

Instance FromPayload(Payload payload) {
  Instance out;
  out.payload = std::move(payload);
  return out;
}

Instance MakeCycle(int n) {
  GraphicPayload g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return FromPayload(std::move(g));
}

Instance MakePath(int n) {
  GraphicPayload g{n, {}};
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return FromPayload(std::move(g));
}

Instance MakeComplete(int n) {
  GraphicPayload g{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return FromPayload(std::move(g));
}

}  // namespace

std::uint64_t SeededRng::Below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t SeededRng::Between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Instance GenTight(int r, int k, int n) {
  if (r < 1) throw InputError("tight family needs r >= 1");
  if (k < 0 || k >= n) throw InputError("tight family needs 0 <= k < n");
  RationalPayload payload{r, {}};
  for (int i = 0; i < r; ++i) {
    for (int j = 1; j <= n; ++j) {
      payload.columns.push_back(UnitVector(r, i, mpq_class(j)));
    }
  }
  Instance out = FromPayload(std::move(payload));
  out.generator = GeneratorInfo{"tight", "none", 0, {{"r", r}, {"k", k}, {"n", n}}};
  out.k_hint = k;
  out.size_hint = (k + 1) * r;
  return out;
}

GeneralPositionInstance GenGeneralPosition(const std::vector<Point>& points,
                                           int p, int pad_to_rank) {
  if (p < 3) throw InputError("general-position reduction needs p >= 3");
  if (pad_to_rank < 3) {
    throw InputError("general-position reduction needs pad_to_rank >= 3");
  }
  std::set<Point> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) {
    throw InputError("general-position reduction needs distinct points");
  }
  const int k = p - 3;
  RationalPayload payload{pad_to_rank, {}};
  for (const auto& [x, y] : points) {
    RationalColumn column(static_cast<std::size_t>(pad_to_rank), mpq_class(0));
    column[0] = x;
    column[1] = y;
    column[2] = 1;
    payload.columns.push_back(std::move(column));
  }
  for (int axis = 3; axis < pad_to_rank; ++axis) {
    for (int copy = 0; copy <= k; ++copy) {
      payload.columns.push_back(UnitVector(pad_to_rank, axis, mpq_class(1)));
    }
  }
  GeneralPositionInstance out;
  out.k = k;
  out.target_size = p + (pad_to_rank - 3) * (k + 1);
  out.instance.payload = std::move(payload);
  out.instance.k_hint = out.k;
  out.instance.size_hint = out.target_size;
  return out;
}

Instance GenRandom(const GenSpec& spec) {
  Params params(spec);
  SeededRng rng(spec.seed);
  Instance out;
  bool seeded = true;
  const std::string& family = spec.family;

  if (family == "tight") {
    const int r = params.Get("r", 2, 1);
    const int n = params.Get("n", 3, 1);
    const int k = params.Get("k", 1, 0, n - 1);
    out = GenTight(r, k, n);
    seeded = false;
  } else if (family == "uniform") {
    const int n = params.Get("n", 5, 0);
    out.payload = UniformPayload{n, params.Get("r", 2, 0, n)};
    seeded = false;
  } else if (family == "graphic-cycle") {
    out = MakeCycle(params.Get("n", 4, 1));
    seeded = false;
  } else if (family == "graphic-path") {
    out = MakePath(params.Get("n", 3, 1));
    seeded = false;
  } else if (family == "graphic-complete") {
    out = MakeComplete(params.Get("n", 4, 1));
    seeded = false;
  } else if (family == "random-graphic") {
    const int v = params.Get("v", 4, 1);
    const int m = params.Get("m", 8, 0);
    GraphicPayload g{v, {}};
    for (int i = 0; i < m; ++i) {
      const int a = static_cast<int>(rng.Below(v));
      const int b = static_cast<int>(rng.Below(v));
      g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    out.payload = std::move(g);
  } else if (family == "random-gf2") {
    const int n = params.Get("n", 8, 0);
    const int d = params.Get("d", 3, 0);
    const int density = params.Get("density", 50, 0, 100);
    Gf2Payload g{d, {}};
    for (int i = 0; i < n; ++i) {
      BitColumn column(d);
      for (int row = 0; row < d; ++row) column.set(row, rng.Chance(density));
      g.columns.push_back(std::move(column));
    }
    out.payload = std::move(g);
  } else if (family == "random-rational") {
    const int n = params.Get("n", 8, 0);
    const int d = params.Get("d", 3, 0);
    const int range = params.Get("range", 3, 0, 1 << 20);
    const int den = params.Get("den", 1, 1, 1 << 20);
    RationalPayload payload{d, {}};
    for (int i = 0; i < n; ++i) {
      RationalColumn column;
      for (int row = 0; row < d; ++row) {
        mpq_class q(static_cast<long>(rng.Between(-range, range)),
                    static_cast<unsigned long>(rng.Between(1, den)));
        q.canonicalize();
        column.push_back(q);
      }
      payload.columns.push_back(std::move(column));
    }
    out.payload = std::move(payload);
  } else if (family == "random-partition") {
    const int n = params.Get("n", 8, 0);
    const int d = params.Get("d", 3, 1);
    const int cap = params.Get("cap", 1, 1);
    std::vector<std::vector<ElementId>> members(static_cast<std::size_t>(d));
    for (int e = 0; e < n; ++e) {
      members[rng.Below(static_cast<std::uint64_t>(d))].push_back(e);
    }
    PartitionPayload payload;
    for (auto& block : members) {
      payload.blocks.push_back(ElementSet::FromSorted(std::move(block)));
      payload.capacities.push_back(static_cast<int>(rng.Between(1, cap)));
    }
    out.payload = std::move(payload);
  } else if (family == "random-transversal") {
    const int n = params.Get("n", 8, 0);
    const int t = params.Get("t", 3, 0);
    const int p = params.Get("p", 50, 0, 100);
    TransversalPayload payload{t, {}};
    for (int e = 0; e < n; ++e) {
      std::vector<int> targets;
      for (int j = 0; j < t; ++j) {
        if (rng.Chance(p)) targets.push_back(j);
      }
      payload.adjacency.push_back(std::move(targets));
    }
    out.payload = std::move(payload);
  } else if (family == "general-position") {
    const int grid = params.Get("grid", 4, 1, 1 << 20);
    const int n = params.Get("n", 6, 0, grid * grid);
    const int p = params.Get("p", 4, 3);
    const int pad = params.Get("pad", 3, 3);
    std::set<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < n) {
      chosen.emplace(static_cast<int>(rng.Below(grid)),
                     static_cast<int>(rng.Below(grid)));
    }
    std::vector<Point> points;
    for (const auto& [x, y] : chosen) points.emplace_back(x, y);
    out = GenGeneralPosition(points, p, pad).instance;
  } else {
    throw InputError("unknown instance family \"" + family + "\"");
  }

  if (params.Has("maxw")) {
    const int maxw = params.Get("maxw", 0, 0, 1 << 30);
    std::vector<std::int64_t> weights;
    for (ElementId e = 0; e < out.ground_size(); ++e) {
      weights.push_back(rng.Between(0, maxw));
    }
    out.weights = std::move(weights);
    seeded = true;
  }
  params.CheckAllUsed();
  // Hints set by GenTight or the reduction stay; provenance is replaced by
  // the resolved generator parameters.
  out.generator = params.Info(seeded);
  return out;
}

}  // namespace ftbasis
