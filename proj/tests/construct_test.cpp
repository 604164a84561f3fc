// Copyright 2026 The nsop Authors
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

#include <gtest/gtest.h>

#include <algorithm>

#include "nsop/construct.hpp"
#include "nsop/errors.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace nsop {
namespace {

Instance TwoRowToy() {
  return Instance::Create("toy", {1, 1, 1}, {{0, 2}, {1, 2}});
}

TEST(GreedyTest, PicksBestRatio) {
  const Solution s = greedy_construct(TwoRowToy());
  EXPECT_EQ(s.selected(), (ColumnSet{2}));
  EXPECT_EQ(s.cost(), 1);
}

TEST(GreedyTest, ForcedSelections) {
  const Instance inst = Instance::Create("x", {1, 1}, {{0}, {1}});
  const Solution s = greedy_construct(inst);
  EXPECT_EQ(s.selected(), (ColumnSet{0, 1}));
  EXPECT_EQ(s.cost(), 2);
}

TEST(GreedyTest, TieGoesToLowerIndexThenRatio) {
  // col0 {r0,r1} cost 2, col1 {r1,r2} cost 2, col2 {r2} cost 3.
  const Instance inst =
      Instance::Create("x", {2, 2, 3}, {{0}, {0, 1}, {1, 2}});
  const Solution s = greedy_construct(inst);
  EXPECT_EQ(s.selected(), (ColumnSet{0, 1}));
  EXPECT_EQ(s.cost(), 4);
  const auto b = testing::ToBits(inst);
  EXPECT_TRUE(testing::Covers(b, testing::ToMask(s.selected())));
}

TEST(GreedyTest, EqualRatioPrefersMoreRows) {
  // col0 covers r0 at cost 1 (ratio 1); col1 covers r0,r1 at cost 2 (ratio 1).
  const Instance inst = Instance::Create("x", {1, 2}, {{0, 1}, {1}});
  EXPECT_EQ(greedy_construct(inst).selected(), (ColumnSet{1}));
}

TEST(GreedyTest, ZeroCostColumnsFirst) {
  const Instance inst = Instance::Create("x", {5, 0, 5}, {{0, 1}, {2}});
  EXPECT_EQ(greedy_construct(inst).selected(), (ColumnSet{1, 2}));
}

TEST(GreedyTest, MultiCoverRows) {
  const Instance inst =
      Instance::Create("x", {1, 2, 3, 4}, {{0, 1, 2, 3}, {3}}, {3, 1});
  const Solution s = greedy_construct(inst);
  EXPECT_TRUE(is_feasible_cover(inst, s.selected()));
}

TEST(RemoveRedundantTest, ExpensiveAndNarrowFirst) {
  const Instance inst = TwoRowToy();
  const Solution all = Solution::FromColumns(inst, std::vector<Column>{0, 1, 2});
  EXPECT_EQ(remove_redundant(inst, all).selected(), (ColumnSet{2}));
}

TEST(RemoveRedundantTest, PureIndexOrderIsAvailable) {
  const Instance inst = TwoRowToy();
  const Solution all = Solution::FromColumns(inst, std::vector<Column>{0, 1, 2});
  EXPECT_EQ(remove_redundant(inst, all, RemovalOrder::kCostThenIndex).selected(),
            (ColumnSet{0, 1}));
}

TEST(RemoveRedundantTest, MinimalCoverUnchanged) {
  const Instance inst = Instance::Create("x", {1, 1}, {{0}, {1}});
  const Solution s = Solution::FromColumns(inst, std::vector<Column>{0, 1});
  EXPECT_EQ(remove_redundant(inst, s), s);
}

TEST(RemoveRedundantTest, RejectsInfeasible) {
  const Instance inst = TwoRowToy();
  const Solution s = Solution::FromColumns(inst, std::vector<Column>{0});
  EXPECT_THROW(remove_redundant(inst, s), ContractViolation);
}

TEST(RemoveRedundantTest, HigherCostGoesFirst) {
  const Instance inst = Instance::Create("x", {1, 1, 5}, {{0, 2}, {1, 2}});
  const Solution all = Solution::FromColumns(inst, std::vector<Column>{0, 1, 2});
  EXPECT_EQ(remove_redundant(inst, all).selected(), (ColumnSet{0, 1}));
}

class ConstructPropertyTest : public ::testing::TestWithParam<RemovalOrder> {};

TEST_P(ConstructPropertyTest, FeasibleSubsetAndOneMinimal) {
  testing::Rng rng(31);
  testing::SmallShape shape;
  shape.max_cols = 30;
  shape.max_rows = 25;
  shape.multi_cover_prob = 0.2;
  for (int trial = 0; trial < 400; ++trial) {
    const Instance inst = testing::RandomSmallInstance(rng, shape);
    const Solution g = greedy_construct(inst);
    ASSERT_TRUE(is_feasible_cover(inst, g.selected()));

    ColumnSet superset = g.selected();
    const ColumnSet extra = testing::RandomSubset(rng, inst.num_cols(), 0.3);
    superset.insert(superset.end(), extra.begin(), extra.end());
    const Solution start = Solution::FromColumns(inst, superset);
    const Solution r = remove_redundant(inst, start, GetParam());

    ASSERT_TRUE(is_feasible_cover(inst, r.selected()));
    ASSERT_LE(r.cost(), start.cost());
    ASSERT_TRUE(std::includes(start.selected().begin(), start.selected().end(),
                              r.selected().begin(), r.selected().end()));
    for (const Column j : r.selected()) {
      ColumnSet without;
      std::copy_if(r.selected().begin(), r.selected().end(),
                   std::back_inserter(without), [j](Column c) { return c != j; });
      ASSERT_FALSE(is_feasible_cover(inst, without)) << "column " << j;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, ConstructPropertyTest,
                         ::testing::Values(RemovalOrder::kCostThenCoverage,
                                           RemovalOrder::kCostThenIndex));

TEST(ConstructPropertyTest, LargeInstancesStayFeasible) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    const Instance inst =
        testing::RandomOrlibLikeInstance(rng, 200, 1000, 0.02);
    const Solution s = remove_redundant(inst, greedy_construct(inst));
    EXPECT_TRUE(is_feasible_cover(inst, s.selected()));
  }
}

}  // namespace
}  // namespace nsop
