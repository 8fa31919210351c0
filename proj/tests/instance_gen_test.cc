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

#include <string>

#include "gtest/gtest.h"
#include "ftbasis/matroid_ops.h"
#include "ftbasis/solver_exact.h"
#include "ftbasis/solver_fpt.h"
#include "test_support.h"

namespace ftbasis {
namespace {

using testing::SubsetTable;

std::vector<Point> Points(std::initializer_list<std::pair<int, int>> xy) {
  std::vector<Point> out;
  for (const auto& [x, y] : xy) out.emplace_back(x, y);
  return out;
}

TEST(GenTightTest, Examples) {
  const Instance a = GenTight(2, 1, 3);
  EXPECT_EQ(a.ground_size(), 6);
  EXPECT_EQ(a.size_hint, 4);
  const auto ma = BuildOracle(a);
  EXPECT_EQ(SubsetTable(*ma).Solve(1, 2).size, 4);
  EXPECT_EQ(SolveFpt(*ma, 1).solution->size(), 4u);

  const auto mb = BuildOracle(GenTight(1, 0, 1));
  EXPECT_EQ(mb->ground_size(), 1);
  EXPECT_EQ(SolveBruteforce(*mb, 0).solution->size(), 1u);

  const auto mc = BuildOracle(GenTight(3, 2, 4));
  EXPECT_EQ(SubsetTable(*mc).Solve(2, 3).size, 9);
  EXPECT_EQ(SolveBruteforce(*mc, 2).solution->size(), 9u);
}

TEST(GenTightTest, ColumnsAreScaledStandardVectors) {
  const Instance inst = GenTight(2, 0, 3);
  const auto& p = std::get<RationalPayload>(inst.payload);
  ASSERT_EQ(p.columns.size(), 6u);
  EXPECT_EQ(p.columns[0], (RationalColumn{1, 0}));
  EXPECT_EQ(p.columns[2], (RationalColumn{3, 0}));
  EXPECT_EQ(p.columns[4], (RationalColumn{0, 2}));
}

TEST(GenTightTest, RejectsBadParameters) {
  EXPECT_THROW(GenTight(2, 3, 3), InputError);
  EXPECT_THROW(GenTight(0, 0, 3), InputError);
  EXPECT_THROW(GenTight(2, -1, 3), InputError);
}

TEST(GenTightTest, OptimaMatchTightBound) {
  for (int r = 1; r <= 3; ++r) {
    for (int k = 0; k <= 2; ++k) {
      for (int n = k + 1; n <= 4; ++n) {
        const auto m = BuildOracle(GenTight(r, k, n));
        const SolveReport s = SolveFpt(*m, k);
        ASSERT_TRUE(s.exists);
        EXPECT_EQ(static_cast<int>(s.solution->size()), (k + 1) * r)
            << "r=" << r << " k=" << k << " n=" << n;
      }
    }
  }
}

TEST(GenGeneralPositionTest, FourPointsInGeneralPosition) {
  const auto gp = GenGeneralPosition(Points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 4, 3);
  EXPECT_EQ(gp.k, 1);
  EXPECT_EQ(gp.target_size, 4);
  const auto m = BuildOracle(gp.instance);
  EXPECT_EQ(SubsetTable(*m).Solve(1, 3).size, 4);
  EXPECT_EQ(SolveFpt(*m, gp.k).solution->size(), 4u);
}

// Feasible at b: the instance keeps its full rank pad_to_rank and some
// k-fault-tolerant basis has exactly b elements.
bool FeasibleAtTarget(const GeneralPositionInstance& gp, int pad) {
  const auto m = BuildOracle(gp.instance);
  if (Rank(*m, ElementSet::Range(m->ground_size())) != pad) return false;
  const SolveReport s = SolveFpt(*m, gp.k);
  return s.exists && static_cast<int>(s.solution->size()) == gp.target_size;
}

TEST(GenGeneralPositionTest, FourCollinearPoints) {
  const auto gp = GenGeneralPosition(Points({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), 4, 3);
  const auto m = BuildOracle(gp.instance);
  // Every 3-subset of the lifted vectors has rank 2.
  EXPECT_EQ(Rank(*m, ElementSet::Range(4)), 2);
  EXPECT_FALSE(IsHUniform(*m, ElementSet::Range(4), 3));
  EXPECT_FALSE(FeasibleAtTarget(gp, 3));
}

TEST(GenGeneralPositionTest, FourCollinearPlusOneOffTheLine) {
  const auto gp = GenGeneralPosition(
      Points({{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}}), 4, 3);
  const auto m = BuildOracle(gp.instance);
  EXPECT_EQ(Rank(*m, ElementSet::Range(5)), 3);
  const auto optimum = SubsetTable(*m).Solve(1, 3);
  EXPECT_TRUE(!optimum.exists || optimum.size > 4);
  EXPECT_FALSE(FeasibleAtTarget(gp, 3));
  EXPECT_TRUE(FeasibleAtTarget(
      GenGeneralPosition(Points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 4, 3), 3));
}

TEST(GenGeneralPositionTest, GridWithFivePoints) {
  std::vector<Point> grid;
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) grid.emplace_back(x, y);
  }
  const auto gp = GenGeneralPosition(grid, 5, 3);
  EXPECT_EQ(gp.k, 2);
  EXPECT_EQ(gp.target_size, 5);
  const auto m = BuildOracle(gp.instance);
  EXPECT_EQ(SubsetTable(*m).Solve(2, 3).size, 5);
  const SolveReport s = SolveFpt(*m, gp.k);
  ASSERT_TRUE(s.exists);
  EXPECT_EQ(static_cast<int>(s.solution->size()), gp.target_size);
  EXPECT_TRUE(IsHUniform(*m, *s.solution, 3));
}

TEST(GenGeneralPositionTest, PaddingRaisesRankAndTarget) {
  const auto gp = GenGeneralPosition(Points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 4, 5);
  EXPECT_EQ(gp.target_size, 4 + 2 * 2);
  const auto m = BuildOracle(gp.instance);
  EXPECT_EQ(m->ground_size(), 8);
  EXPECT_EQ(Rank(*m, ElementSet::Range(8)), 5);
  const SolveReport s = SolveFpt(*m, gp.k);
  ASSERT_TRUE(s.exists);
  EXPECT_EQ(static_cast<int>(s.solution->size()), gp.target_size);
}

TEST(GenGeneralPositionTest, RejectsBadInput) {
  const auto pts = Points({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_THROW(GenGeneralPosition(pts, 2, 3), InputError);
  EXPECT_THROW(GenGeneralPosition(pts, 3, 2), InputError);
  EXPECT_THROW(GenGeneralPosition(Points({{0, 0}, {0, 0}}), 3, 3), InputError);
}

TEST(GenRandomTest, Examples) {
  const Instance u = GenRandom({"uniform", {{"r", 2}, {"n", 5}}, 0});
  const auto& payload = std::get<UniformPayload>(u.payload);
  EXPECT_EQ(payload.n, 5);
  EXPECT_EQ(payload.r, 2);

  const auto c6 = BuildOracle(GenRandom({"graphic-cycle", {{"n", 6}}, 0}));
  EXPECT_EQ(SubsetTable(*c6).Solve(1, 5).size, 6);
  EXPECT_EQ(SolveFpt(*c6, 1).solution->size(), 6u);
}

TEST(GenRandomTest, Deterministic) {
  for (const char* family :
       {"random-gf2", "random-rational", "random-partition",
        "random-transversal", "random-graphic", "general-position"}) {
    const GenSpec spec{family, {{"maxw", 9}}, 42};
    const std::string a = SerializeInstance(GenRandom(spec));
    EXPECT_EQ(a, SerializeInstance(GenRandom(spec))) << family;
    const GenSpec other{family, {{"maxw", 9}}, 43};
    EXPECT_NE(a, SerializeInstance(GenRandom(other))) << family;
  }
}

TEST(GenRandomTest, RecordsProvenance) {
  const Instance inst = GenRandom({"random-gf2", {{"n", 4}}, 7});
  ASSERT_TRUE(inst.generator.has_value());
  EXPECT_EQ(inst.generator->family, "random-gf2");
  EXPECT_EQ(inst.generator->prng, kPrngName);
  EXPECT_EQ(inst.generator->seed, 7u);
  EXPECT_EQ(inst.generator->params.at("n"), 4);
  EXPECT_EQ(inst.generator->params.at("d"), 3);
  const Instance fixed = GenRandom({"uniform", {}, 7});
  EXPECT_EQ(fixed.generator->prng, "none");
}

TEST(GenRandomTest, RejectsBadSpecs) {
  EXPECT_THROW(GenRandom({"moebius", {}, 0}), InputError);
  EXPECT_THROW(GenRandom({"uniform", {{"r", 6}, {"n", 5}}, 0}), InputError);
  EXPECT_THROW(GenRandom({"tight", {{"k", 3}, {"n", 3}}, 0}), InputError);
  EXPECT_THROW(GenRandom({"uniform", {{"bogus", 1}}, 0}), InputError);
}

TEST(GenRandomTest, GeneratedInstancesSatisfyExchange) {
  const std::vector<GenSpec> specs = {
      {"tight", {{"r", 3}, {"n", 3}}, 0},
      {"graphic-complete", {{"n", 5}}, 0},
      {"graphic-path", {{"n", 6}}, 0},
      {"general-position", {{"grid", 3}, {"n", 7}, {"pad", 4}}, 5},
      {"random-transversal", {{"n", 11}, {"t", 4}}, 5},
  };
  for (const GenSpec& spec : specs) {
    const auto m = BuildOracle(GenRandom(spec));
    const SubsetTable t(*m);
    const testing::Mask total = testing::Mask{1} << t.n();
    testing::TestRng rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const testing::Mask i = rng.Next() % total;
      const testing::Mask j = rng.Next() % total;
      if (!t.independent(i) || !t.independent(j) ||
          std::popcount(i) >= std::popcount(j)) {
        continue;
      }
      bool ok = false;
      for (int x = 0; x < t.n() && !ok; ++x) {
        if ((j & ~i) >> x & 1) ok = t.independent(i | testing::Mask{1} << x);
      }
      EXPECT_TRUE(ok) << spec.family;
    }
  }
}

}  // namespace
}  // namespace ftbasis
