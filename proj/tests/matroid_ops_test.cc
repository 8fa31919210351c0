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

#include "ftbasis/matroid_ops.h"

#include <bit>
#include <string>

#include "gtest/gtest.h"
#include "ftbasis/combinations.h"
#include "ftbasis/gf2_matroid.h"
#include "ftbasis/graphic_matroid.h"
#include "ftbasis/partition_matroid.h"
#include "ftbasis/rational_matroid.h"
#include "ftbasis/uniform_matroid.h"
#include "test_support.h"

namespace ftbasis {
namespace {

using testing::Col;
using testing::CompleteEdges;
using testing::CycleEdges;
using testing::FromMask;
using testing::Mask;
using testing::SubsetTable;
using testing::ToMask;

LinearGf2Matroid Gf2(std::initializer_list<const char*> columns) {
  std::vector<BitColumn> cols;
  for (const char* c : columns) cols.push_back(BitColumn::FromString(c));
  return LinearGf2Matroid(static_cast<int>(cols.front().dimension()), cols);
}

TEST(RankTest, Examples) {
  const UniformMatroid u(2, 5);
  EXPECT_EQ(Rank(u, {}), 0);
  const GraphicMatroid k3(3, CompleteEdges(3));
  EXPECT_EQ(Rank(k3, ElementSet::Range(3)), 2);
  const LinearGf2Matroid g = Gf2({"10", "01", "11"});
  EXPECT_EQ(Rank(g, ElementSet::Range(3)), 2);
}

TEST(RankTest, OutOfRangeIsInputError) {
  const UniformMatroid u(2, 5);
  EXPECT_THROW(Rank(u, {5}), InputError);
  EXPECT_THROW(Closure(u, {7}), InputError);
}

TEST(RankTest, GreedyIssuesOneQueryPerElement) {
  const UniformMatroid u(2, 6);
  CallMeter meter(u);
  Rank(u, {0, 2, 4, 5});
  EXPECT_EQ(meter.calls(), 4u);
}

TEST(ClosureTest, EmptySetGivesLoops) {
  const LinearRationalMatroid m(
      2, {Col({1, 0}), Col({0, 0}), Col({0, 1}), Col({0, 0})});
  EXPECT_EQ(Closure(m, {}), ElementSet({1, 3}));
  EXPECT_EQ(Loops(m), ElementSet({1, 3}));
}

TEST(ClosureTest, UnitPartitionBlock) {
  const PartitionMatroid m({ElementSet{0, 2, 4}, ElementSet{1, 3}});
  EXPECT_EQ(Closure(m, {2}), ElementSet({0, 2, 4}));
  EXPECT_EQ(Closure(m, {3}), ElementSet({1, 3}));
}

TEST(ClosureTest, TriangleOfK4) {
  const GraphicMatroid k4(4, CompleteEdges(4));
  // Edges (0,1), (0,2), (1,2) have ids 0, 1, 3.
  const ElementSet triangle{0, 1, 3};
  const SubsetTable table(k4);
  const ElementSet expected = FromMask(table.Closure(ToMask(triangle)));
  EXPECT_EQ(expected, triangle);
  EXPECT_EQ(Closure(k4, triangle), triangle);
}

TEST(ClosureTest, QueryCount) {
  const UniformMatroid u(3, 8);
  CallMeter meter(u);
  Closure(u, {1, 2});
  EXPECT_EQ(meter.calls(), 2u + 6u);
}

TEST(FindBasisTest, Examples) {
  const LinearRationalMatroid zero(2, {Col({0, 0}), Col({0, 0})});
  EXPECT_TRUE(FindBasis(zero).empty());
  EXPECT_EQ(FindBasis(UniformMatroid(2, 5)), ElementSet({0, 1}));
  EXPECT_EQ(FindBasis(GraphicMatroid(4, CycleEdges(4))), ElementSet({0, 1, 2}));
}

TEST(RemoveLoopsTest, Examples) {
  const UniformMatroid u(2, 4);
  const LoopFreeMatroid a = RemoveLoops(u);
  EXPECT_TRUE(a.loops.empty());
  EXPECT_EQ(a.view.ground_size(), 4);

  const LinearRationalMatroid m(2, {Col({1, 1}), Col({0, 0}), Col({0, 3})});
  const LoopFreeMatroid b = RemoveLoops(m);
  EXPECT_EQ(b.loops, ElementSet({1}));
  ASSERT_EQ(b.view.ground_size(), 2);
  EXPECT_EQ(b.view.ToBase(ElementSet{0, 1}), ElementSet({0, 2}));
  for (ElementId e = 0; e < b.view.ground_size(); ++e) {
    EXPECT_TRUE(b.view.IsIndependent(ElementSet{e}));
  }

  const PartitionMatroid p({ElementSet{0, 1}, ElementSet{2}});
  EXPECT_TRUE(RemoveLoops(p).loops.empty());
  EXPECT_EQ(ComputeRankProfile(p).full_rank, 2);
}

TEST(DeleteTest, Examples) {
  const GraphicMatroid c4(4, CycleEdges(4));
  const DeletionView none = Delete(c4, {});
  EXPECT_EQ(none.ground_size(), 4);
  EXPECT_EQ(Rank(none, ElementSet::Range(4)), 3);
  EXPECT_EQ(Rank(Delete(c4, {2}), ElementSet::Range(3)), 3);
  EXPECT_EQ(Rank(Delete(c4, {0, 1}), ElementSet::Range(2)), 2);
  EXPECT_EQ(Rank(Delete(c4, {0, 2}), ElementSet::Range(2)), 2);
}

TEST(DeleteTest, BackMapping) {
  const UniformMatroid u(2, 6);
  const DeletionView v = Delete(u, {1, 4});
  EXPECT_EQ(v.ToBase(ElementSet{0, 1, 2, 3}), ElementSet({0, 2, 3, 5}));
  EXPECT_EQ(v.FromBase(ElementSet{5, 0}), ElementSet({0, 3}));
  EXPECT_THROW(v.FromBase(ElementSet{4}), InputError);
}

TEST(TruncateTest, Examples) {
  const GraphicMatroid k4(4, CompleteEdges(4));
  const SubsetTable full(k4);
  const SubsetTable same(Truncate(k4, 3));
  for (Mask s = 0; s < (Mask{1} << 6); ++s) {
    EXPECT_EQ(full.independent(s), same.independent(s));
  }

  const SubsetTable t(Truncate(UniformMatroid(3, 5), 2));
  const SubsetTable u25(UniformMatroid(2, 5));
  for (Mask s = 0; s < (Mask{1} << 5); ++s) {
    EXPECT_EQ(t.independent(s), u25.independent(s));
  }

  const TruncationView zero = Truncate(k4, 0);
  EXPECT_EQ(Loops(zero), ElementSet::Range(6));
  EXPECT_THROW(Truncate(k4, -1), InputError);
}

TEST(TruncateTest, OversizedQueriesDoNotReachBase) {
  const UniformMatroid u(4, 6);
  const TruncationView t(u, 2);
  CallMeter meter(u);
  EXPECT_FALSE(t.IsIndependent(ElementSet{0, 1, 2}));
  EXPECT_EQ(meter.calls(), 0u);
}

TEST(FaultTolerantTest, Examples) {
  const GraphicMatroid k4(4, CompleteEdges(4));
  EXPECT_TRUE(IsFaultTolerant(k4, FindBasis(k4), 0));
  const GraphicMatroid c4(4, CycleEdges(4));
  EXPECT_TRUE(IsFaultTolerant(c4, ElementSet::Range(4), 1));
  EXPECT_FALSE(IsFaultTolerant(c4, ElementSet::Range(4), 2));
}

TEST(FaultTolerantTest, WitnessIsFirstLexicographicFailure) {
  const GraphicMatroid c4(4, CycleEdges(4));
  const auto witness = FindFailureSet(c4, ElementSet::Range(4), 2, 3);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(*witness, ElementSet({0, 1}));
  EXPECT_LT(Rank(c4, ElementSet::Range(4).Difference(*witness)), 3);
}

TEST(FaultTolerantTest, KLargerThanSet) {
  const UniformMatroid u(1, 3);
  // Removing everything leaves rank 0.
  EXPECT_FALSE(IsFaultTolerant(u, {0, 1}, 5));
  const UniformMatroid empty(0, 2);
  EXPECT_TRUE(IsFaultTolerant(empty, {}, 3));
  EXPECT_THROW(IsFaultTolerant(u, {0}, -1), InputError);
}

TEST(HUniformTest, Examples) {
  const LinearRationalMatroid m(
      2, {Col({1, 0}), Col({0, 1}), Col({1, 1}), Col({2, 0})});
  EXPECT_TRUE(IsHUniform(m, {0}, 1));
  EXPECT_TRUE(IsHUniform(m, {0, 1, 2}, 2));
  EXPECT_FALSE(IsHUniform(m, {0, 3, 1}, 2));
  EXPECT_FALSE(IsHUniform(m, {0, 3}, 1 + 1));
  EXPECT_THROW(IsHUniform(m, {0}, 0), InputError);
}

TEST(SizeBoundsTest, Examples) {
  EXPECT_EQ(SizeBounds(1, 0), std::make_pair(1, 1));
  EXPECT_EQ(SizeBounds(2, 1), std::make_pair(3, 4));
  EXPECT_EQ(SizeBounds(3, 2), std::make_pair(5, 9));
  EXPECT_THROW(SizeBounds(0, 1), InputError);
  EXPECT_THROW(SizeBounds(2, -1), InputError);
}

// Property sweeps over seeded zoo instances.

class ZooPropertyTest : public ::testing::TestWithParam<std::string_view> {};

TEST_P(ZooPropertyTest, RankAndClosureMatchExhaustiveTable) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto m = BuildOracle(testing::RandomZooInstance(GetParam(), seed, 10, 3));
    const SubsetTable table(*m);
    const int n = m->ground_size();
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      const ElementSet a = FromMask(s);
      ASSERT_EQ(Rank(*m, a), table.rank(s)) << a.ToString();
      ASSERT_EQ(ToMask(Closure(*m, a)), table.Closure(s)) << a.ToString();
    }
    EXPECT_EQ(static_cast<int>(FindBasis(*m).size()), table.full_rank());
  }
}

TEST_P(ZooPropertyTest, ClosureAxioms) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto m = BuildOracle(testing::RandomZooInstance(GetParam(), seed, 12, 3));
    const int n = m->ground_size();
    testing::TestRng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      const ElementSet a = FromMask(rng.SubsetOf(n));
      const ElementSet b = a.Union(FromMask(rng.SubsetOf(n)));
      const ElementSet cl = Closure(*m, a);
      EXPECT_TRUE(a.IsSubsetOf(cl));                      // CL1
      EXPECT_TRUE(cl.IsSubsetOf(Closure(*m, b)));         // CL2
      EXPECT_EQ(Closure(*m, cl), cl);                     // CL3
      for (ElementId x = 0; x < n; ++x) {                 // CL4
        if (a.contains(x)) continue;
        const ElementSet grown = Closure(*m, a.With(x));
        for (ElementId y : grown.Difference(cl)) {
          EXPECT_TRUE(Closure(*m, a.With(y)).contains(x));
        }
      }
    }
  }
}

TEST_P(ZooPropertyTest, RankMonotoneAndSubmodular) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto m = BuildOracle(testing::RandomZooInstance(GetParam(), seed, 12, 3));
    const int n = m->ground_size();
    testing::TestRng rng(seed * 7);
    for (int trial = 0; trial < 30; ++trial) {
      const ElementSet a = FromMask(rng.SubsetOf(n));
      const ElementSet b = FromMask(rng.SubsetOf(n));
      EXPECT_LE(Rank(*m, a), Rank(*m, a.Union(b)));
      EXPECT_LE(Rank(*m, a.Union(b)) + Rank(*m, a.Intersection(b)),
                Rank(*m, a) + Rank(*m, b));
    }
  }
}

TEST_P(ZooPropertyTest, FaultToleranceMatchesAllFailureSizes) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto m = BuildOracle(testing::RandomZooInstance(GetParam(), seed, 10, 3));
    const SubsetTable table(*m);
    const int n = m->ground_size();
    const int r = table.full_rank();
    testing::TestRng rng(seed * 13);
    for (int trial = 0; trial < 40; ++trial) {
      const Mask b = rng.SubsetOf(n);
      const int k = rng.Uniform(0, 3);
      ASSERT_EQ(IsFaultTolerant(*m, FromMask(b), k), table.Tolerant(b, k, r))
          << FromMask(b).ToString() << " k=" << k;
    }
  }
}

TEST_P(ZooPropertyTest, MinimumSizeSetsAreExactlyRankUniform) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto m = BuildOracle(testing::RandomZooInstance(GetParam(), seed, 9, 3));
    const int r = static_cast<int>(FindBasis(*m).size());
    const int n = m->ground_size();
    if (r == 0) continue;
    for (int k = 0; k <= 2 && r + k <= n; ++k) {
      ForEachCombination(n, r + k, [&](std::span<const std::size_t> pos) {
        std::vector<ElementId> ids(pos.begin(), pos.end());
        const ElementSet b(ids);
        EXPECT_EQ(IsFaultTolerant(*m, b, k), IsHUniform(*m, b, r))
            << b.ToString() << " k=" << k;
        return true;
      });
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Zoo, ZooPropertyTest,
                         ::testing::ValuesIn(testing::kZooFamilies),
                         [](const auto& info) {
                           return std::string(info.param);
                         });

}  // namespace
}  // namespace ftbasis
