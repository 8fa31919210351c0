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

#include "ftbasis/solver_partition.h"

#include <bit>
#include <string>

#include "gtest/gtest.h"
#include "ftbasis/instance_gen.h"
#include "ftbasis/matroid_ops.h"
#include "ftbasis/rational_matroid.h"
#include "ftbasis/solver_exact.h"
#include "ftbasis/solver_fpt.h"
#include "ftbasis/views.h"
#include "test_support.h"

namespace ftbasis {
namespace {

using testing::Col;
using testing::FromMask;
using testing::Mask;
using testing::SubsetTable;
using testing::TestRng;
using testing::ToMask;

TEST(PartitionUnitTest, TwoBlocksWeightNine) {
  const std::vector<ElementSet> blocks = {{0, 1, 2}, {3, 4}};
  const std::vector<std::int64_t> w = {1, 2, 3, 1, 5};
  const PartitionMatroid m(blocks);
  const SubsetTable table(m);
  ASSERT_EQ(table.Solve(1, 2, &w).weight, 9);

  const SolveReport r = SolvePartitionUnit(blocks, WeightMap(w), 2, 1);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(r.weight, 9);
  EXPECT_EQ(*r.solution, ElementSet({0, 1, 3, 4}));
  EXPECT_EQ(r.stats.solver, "partition");
  // s = 2 and s = 3 are feasible, s = 1 is not.
  EXPECT_EQ(r.stats.subsets_examined, 2u);
}

TEST(PartitionUnitTest, SingleBlockCannotReachRankTwo) {
  const std::vector<ElementSet> blocks = {{0, 1, 2, 3}};
  EXPECT_FALSE(SolvePartitionUnit(blocks, WeightMap::Unit(4), 2, 0).exists);
  EXPECT_FALSE(SolvePartitionUnit(blocks, WeightMap::Unit(4), 2, 1).exists);
}

TEST(PartitionUnitTest, RankOneTakesCheapestPair) {
  const std::vector<ElementSet> blocks = {{0, 1}, {2}};
  const std::vector<std::int64_t> w = {5, 1, 2};
  const PartitionMatroid base(blocks);
  const SubsetTable table(TruncationView(base, 1));
  ASSERT_EQ(table.Solve(1, 1, &w).weight, 3);
  const SolveReport r = SolvePartitionUnit(blocks, WeightMap(w), 1, 1);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(r.weight, 3);
  EXPECT_EQ(*r.solution, ElementSet({1, 2}));
}

TEST(PartitionUnitTest, RankZeroAndErrors) {
  const std::vector<ElementSet> blocks = {{0}, {1}};
  const SolveReport r = SolvePartitionUnit(blocks, WeightMap::Unit(2), 0, 3);
  ASSERT_TRUE(r.exists);
  EXPECT_TRUE(r.solution->empty());
  EXPECT_EQ(r.weight, 0);
  EXPECT_THROW(SolvePartitionUnit(blocks, WeightMap::Unit(3), 1, 0), InputError);
  const std::vector<ElementSet> overlap = {{0, 1}, {1}};
  EXPECT_THROW(SolvePartitionUnit(overlap, WeightMap::Unit(2), 1, 0),
               InputError);
  const PartitionMatroid capped({ElementSet{0, 1}}, {2});
  EXPECT_THROW(SolvePartitionUnit(capped, WeightMap::Unit(2), 1, 0), InputError);
}

TEST(PartitionUnitTest, MatchesWeightedBruteforceOnTruncations) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    TestRng rng(seed);
    GenSpec spec{"random-partition",
                 {{"n", rng.Uniform(1, 10)}, {"d", rng.Uniform(1, 4)}},
                 seed};
    const Instance inst = GenRandom(spec);
    const auto& blocks = std::get<PartitionPayload>(inst.payload).blocks;
    const PartitionMatroid m(blocks);
    const int n = m.ground_size();
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = rng.Uniform(0, 9);
    for (int r = 1; r <= 3; ++r) {
      const SubsetTable table{TruncationView(m, r)};
      for (int k = 0; k <= 2; ++k) {
        SCOPED_TRACE("seed " + std::to_string(seed) + " r " +
                     std::to_string(r) + " k " + std::to_string(k));
        const auto want = table.Solve(k, r, &w);
        const SolveReport got = SolvePartitionUnit(blocks, WeightMap(w), r, k);
        ASSERT_EQ(got.exists, want.exists);
        if (!got.exists) continue;
        EXPECT_EQ(got.weight, want.weight);
        EXPECT_TRUE(table.Tolerant(ToMask(*got.solution), k, r));
      }
    }
  }
}

TEST(PartitionUnitTest, MinimalFeasibleSetsHaveSweepShape) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    TestRng rng(seed);
    GenSpec spec{"random-partition",
                 {{"n", rng.Uniform(2, 9)}, {"d", rng.Uniform(1, 4)}},
                 seed};
    const std::vector<ElementSet> blocks =
        std::get<PartitionPayload>(GenRandom(spec).payload).blocks;
    const PartitionMatroid m(blocks);
    const int n = m.ground_size();
    for (int r = 1; r <= 3; ++r) {
      const SubsetTable table{TruncationView(m, r)};
      for (int k = 0; k <= 2; ++k) {
        for (Mask x = 0; x < (Mask{1} << n); ++x) {
          if (!table.Tolerant(x, k, r)) continue;
          bool minimal = true;
          for (int e = 0; e < n && minimal; ++e) {
            if (x >> e & 1) minimal = !table.Tolerant(x & ~(Mask{1} << e), k, r);
          }
          if (!minimal) continue;
          int largest_share = 0;
          for (const ElementSet& b : blocks) {
            largest_share = std::max(largest_share,
                                     std::popcount(x & ToMask(b)));
          }
          bool shaped = false;
          for (int s = std::max(largest_share, 1); s <= n && !shaped; ++s) {
            shaped = std::popcount(x) == s * (r - 1) + k + 1;
          }
          EXPECT_TRUE(shaped) << FromMask(x).ToString() << " r " << r
                              << " k " << k;
        }
      }
    }
  }
}

TEST(PartitionGeneralTest, Examples) {
  const std::vector<ElementSet> blocks = {{0, 1, 2}, {3, 4}};
  const std::vector<int> caps = {1, 1};
  const WeightMap w({3, 1, 2, 7, 4});
  const SolveReport r = SolvePartitionGeneral(blocks, caps, w, 1);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(*r.solution, ElementSet({1, 2, 3, 4}));
  EXPECT_EQ(r.weight, 14);

  const std::vector<ElementSet> tight = {{0, 1}, {2}};
  const std::vector<int> full = {2, 1};
  EXPECT_FALSE(SolvePartitionGeneral(tight, full, WeightMap::Unit(3), 1).exists);

  const std::vector<int> one = {1, 1};
  const SolveReport basis = SolvePartitionGeneral(blocks, one, w, 0);
  ASSERT_TRUE(basis.exists);
  EXPECT_EQ(*basis.solution, ElementSet({1, 4}));
}

TEST(PartitionGeneralTest, CapacityAboveBlockSizeAtKZero) {
  const std::vector<ElementSet> blocks = {{0}, {1, 2}};
  const std::vector<int> caps = {3, 1};
  const SolveReport r = SolvePartitionGeneral(blocks, caps, WeightMap({1, 2, 1}), 0);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(*r.solution, ElementSet({0, 2}));
}

TEST(PartitionGeneralTest, MatchesWeightedBruteforce) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    TestRng rng(seed);
    GenSpec spec{"random-partition",
                 {{"n", rng.Uniform(1, 10)},
                  {"d", rng.Uniform(1, 4)},
                  {"cap", 3}},
                 seed};
    const auto payload = std::get<PartitionPayload>(GenRandom(spec).payload);
    const PartitionMatroid m(payload.blocks, payload.capacities);
    const SubsetTable table(m);
    std::vector<std::int64_t> w(m.ground_size());
    for (auto& x : w) x = rng.Uniform(0, 9);
    for (int k = 0; k <= 2; ++k) {
      const auto want = table.Solve(k, table.full_rank(), &w);
      const SolveReport got =
          SolvePartitionGeneral(payload.blocks, payload.capacities, WeightMap(w), k);
      ASSERT_EQ(got.exists, want.exists) << "seed " << seed << " k " << k;
      if (got.exists) EXPECT_EQ(got.weight, want.weight);
    }
  }
}

TEST(CollinearityTest, Examples) {
  const LinearRationalMatroid distinct(
      2, {Col({1, 0}), Col({0, 1}), Col({1, 1})});
  EXPECT_EQ(CollinearityClasses(distinct),
            (std::vector<ElementSet>{{0}, {1}, {2}}));
  const LinearRationalMatroid line(2, {Col({1, 0}), Col({2, 0}), Col({3, 0})});
  EXPECT_EQ(CollinearityClasses(line), (std::vector<ElementSet>{{0, 1, 2}}));
  const PartitionMatroid p({ElementSet{0, 3}, ElementSet{1, 2, 4}});
  EXPECT_EQ(CollinearityClasses(p),
            (std::vector<ElementSet>{{0, 3}, {1, 2, 4}}));
}

TEST(CollinearityTest, LoopsAreSkipped) {
  const LinearRationalMatroid m(
      2, {Col({0, 0}), Col({1, 0}), Col({0, 1}), Col({2, 0})});
  EXPECT_EQ(CollinearityClasses(m), (std::vector<ElementSet>{{1, 3}, {2}}));
}

TEST(RankLe2Test, Examples) {
  const LinearRationalMatroid m(
      2, {Col({1, 0}), Col({2, 0}), Col({0, 1}), Col({1, 1})});
  const SolveReport a = SolveRankLe2(m, WeightMap::Unit(4), 1);
  ASSERT_TRUE(a.exists);
  EXPECT_EQ(a.weight, 3);
  EXPECT_EQ(*a.solution, ElementSet({0, 2, 3}));
  EXPECT_EQ(a.stats.solver, "rank2");

  const LinearRationalMatroid rank1(
      2, {Col({1, 2}), Col({2, 4}), Col({-1, -2}), Col({3, 6})});
  const SolveReport b = SolveRankLe2(rank1, WeightMap({4, 1, 1, 1}), 2);
  ASSERT_TRUE(b.exists);
  EXPECT_EQ(b.weight, 3);
  EXPECT_EQ(*b.solution, ElementSet({1, 2, 3}));

  const LinearRationalMatroid two_lines(
      2, {Col({1, 0}), Col({2, 0}), Col({0, 1}), Col({0, 2})});
  const SubsetTable table(two_lines);
  ASSERT_FALSE(table.Solve(3, 2).exists);
  EXPECT_FALSE(SolveRankLe2(two_lines, WeightMap::Unit(4), 3).exists);
}

TEST(RankLe2Test, RankZeroAndLoops) {
  const LinearRationalMatroid zero(1, {Col({0}), Col({0})});
  const SolveReport r = SolveRankLe2(zero, WeightMap::Unit(2), 4);
  ASSERT_TRUE(r.exists);
  EXPECT_TRUE(r.solution->empty());

  const LinearRationalMatroid loopy(
      2, {Col({0, 0}), Col({1, 0}), Col({0, 1}), Col({1, 1})});
  const SolveReport s = SolveRankLe2(loopy, WeightMap({0, 5, 5, 5}), 1);
  ASSERT_TRUE(s.exists);
  EXPECT_EQ(*s.solution, ElementSet({1, 2, 3}));
}

TEST(RankLe2Test, RejectsRankThree) {
  const LinearRationalMatroid m(
      3, {Col({1, 0, 0}), Col({0, 1, 0}), Col({0, 0, 1})});
  EXPECT_THROW(SolveRankLe2(m, WeightMap::Unit(3), 0), InputError);
}

TEST(RankLe2Test, MatchesBruteforceAndFpt) {
  for (std::string_view family : testing::kZooFamilies) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const auto m = BuildOracle(testing::RandomZooInstance(family, seed, 10, 2));
      const SubsetTable table(*m);
      TestRng rng(seed);
      std::vector<std::int64_t> w(m->ground_size());
      for (auto& x : w) x = rng.Uniform(0, 9);
      for (int k = 0; k <= 2; ++k) {
        SCOPED_TRACE(std::string(family) + " seed " + std::to_string(seed) +
                     " k " + std::to_string(k));
        const SolveReport got = SolveRankLe2(*m, WeightMap(w), k);
        const auto want = table.Solve(k, table.full_rank(), &w);
        ASSERT_EQ(got.exists, want.exists);
        ASSERT_EQ(got.exists, SolveFpt(*m, k).exists);
        if (!got.exists) continue;
        EXPECT_EQ(got.weight, want.weight);
        EXPECT_TRUE(IsFaultTolerant(*m, *got.solution, k));
      }
    }
  }
}

}  // namespace
}  // namespace ftbasis
