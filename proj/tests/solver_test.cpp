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

#include <bit>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nsop/construct.hpp"
#include "nsop/errors.hpp"
#include "nsop/nsop.hpp"
#include "nsop/solver.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace nsop {
namespace {

using testing::Mask;

Instance TwoRowToy() {
  return Instance::Create("toy", {1, 1, 1}, {{0, 2}, {1, 2}});
}

SolverConfig Unlimited() {
  SolverConfig c;
  c.time_limit = Seconds(1e6);
  return c;
}

// Cheapest NSOP point agreeing with the fixings, by enumeration.
std::optional<Cost> BestCompletion(const testing::BitInstance& b, Mask inc,
                                   int k, Mask zero, Mask one) {
  std::optional<Cost> best;
  const Cost cap = testing::MaskCost(b, inc) - 1;
  for (Mask x = 0; x < (Mask{1} << b.n); ++x) {
    if ((x & zero) != 0 || (x & one) != one) continue;
    const int d = std::popcount(x ^ inc);
    const Cost c = testing::MaskCost(b, x);
    if (d < 1 || d > k || c > cap || !testing::Covers(b, x)) continue;
    if (!best || c < *best) best = c;
  }
  return best;
}

TEST(SolveTest, ToyOptimal) {
  const Instance inst = TwoRowToy();
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{0, 1});
  const SolveOutcome out = solve(build_nsop(inst, inc, 3), Unlimited());
  EXPECT_EQ(out.status, SolveStatus::kProvenOptimal);
  ASSERT_TRUE(out.best.has_value());
  EXPECT_EQ(out.best->selected(), (ColumnSet{2}));
  EXPECT_EQ(out.best->cost(), 1);
}

TEST(SolveTest, ToyInfeasible) {
  const Instance inst = TwoRowToy();
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{0, 1});
  const SolveOutcome out = solve(build_nsop(inst, inc, 2), Unlimited());
  EXPECT_EQ(out.status, SolveStatus::kProvenInfeasible);
  EXPECT_FALSE(out.best.has_value());
  EXPECT_TRUE(std::isinf(out.lower_bound));
}

TEST(SolveTest, EighteenColumnsFullRadius) {
  testing::Rng rng(51);
  testing::SmallShape shape;
  shape.min_cols = shape.max_cols = 18;
  shape.min_rows = shape.max_rows = 8;
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testing::RandomSmallInstance(rng, shape);
    const Solution inc = greedy_construct(inst);
    const auto b = testing::ToBits(inst);
    const auto oracle = testing::EnumerateNsop(b, testing::ToMask(inc.selected()), 18);
    const SolveOutcome out = solve(build_nsop(inst, inc, 18), Unlimited());
    if (oracle.best_cost) {
      ASSERT_EQ(out.status, SolveStatus::kProvenOptimal);
      ASSERT_EQ(out.best->cost(), *oracle.best_cost);
    } else {
      ASSERT_EQ(out.status, SolveStatus::kProvenInfeasible);
    }
  }
}

TEST(SolvePropertyTest, MatchesOracle) {
  testing::Rng rng(52);
  testing::SmallShape shape;
  shape.multi_cover_prob = 0.15;
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = testing::RandomSmallInstance(rng, shape);
    const Solution inc = remove_redundant(inst, greedy_construct(inst));
    const int k = 1 + static_cast<int>(rng() % inst.num_cols());
    const NsopModel model = build_nsop(inst, inc, k);
    const auto oracle = testing::EnumerateNsop(
        testing::ToBits(inst), testing::ToMask(inc.selected()), k);
    const SolveOutcome out = solve(model, Unlimited());
    if (oracle.best_cost) {
      ASSERT_EQ(out.status, SolveStatus::kProvenOptimal) << trial;
      ASSERT_TRUE(out.best.has_value());
      ASSERT_EQ(out.best->cost(), *oracle.best_cost) << trial;
      ASSERT_TRUE(is_nsop_feasible(model, out.best->selected()));
      ASSERT_EQ(std::ceil(out.lower_bound - 1e-6),
                static_cast<double>(out.best->cost()));
    } else {
      ASSERT_EQ(out.status, SolveStatus::kProvenInfeasible) << trial;
      ASSERT_FALSE(out.best.has_value());
    }
  }
}

TEST(LowerBoundTest, FullyFixed) {
  const Instance inst = TwoRowToy();
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{0, 1});
  const NsopModel model = build_nsop(inst, inc, 3);
  const auto feasible = lower_bound(model, ColumnSet{0, 1}, ColumnSet{2});
  ASSERT_TRUE(feasible.has_value());
  EXPECT_NEAR(*feasible, 1.0, 1e-9);
  EXPECT_FALSE(lower_bound(model, ColumnSet{2}, ColumnSet{0, 1}).has_value());
  EXPECT_FALSE(lower_bound(model, ColumnSet{0, 2}, ColumnSet{1}).has_value());
}

TEST(LowerBoundTest, NoFixings) {
  const Instance inst = TwoRowToy();
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{0, 1});
  const auto lb = lower_bound(build_nsop(inst, inc, 3), {}, {});
  ASSERT_TRUE(lb.has_value());
  EXPECT_LE(*lb, 1.0 + 1e-9);
}

TEST(LowerBoundTest, CutUnsatisfiableByFixedOnes) {
  const Instance inst = Instance::Create("x", {2, 3, 4}, {{0, 1, 2}});
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{1});
  const NsopModel model = build_nsop(inst, inc, 3);
  EXPECT_FALSE(lower_bound(model, {}, ColumnSet{2}).has_value());
  EXPECT_THROW(lower_bound(model, ColumnSet{0}, ColumnSet{0}),
               ContractViolation);
}

TEST(LowerBoundPropertyTest, NeverExceedsBestCompletion) {
  testing::Rng rng(53);
  testing::SmallShape shape;
  shape.max_cols = 14;
  shape.multi_cover_prob = 0.2;
  std::uniform_int_distribution<int> state(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::RandomSmallInstance(rng, shape);
    const Solution inc = greedy_construct(inst);
    const int n = inst.num_cols();
    const int k = 1 + static_cast<int>(rng() % n);
    const NsopModel model = build_nsop(inst, inc, k);
    const auto b = testing::ToBits(inst);
    for (int node = 0; node < 10; ++node) {
      ColumnSet zero, one;
      Mask zm = 0, om = 0;
      for (Column j = 0; j < n; ++j) {
        const int s = state(rng);
        if (s == 0) { zero.push_back(j); zm |= Mask{1} << j; }
        if (s == 1) { one.push_back(j); om |= Mask{1} << j; }
      }
      const auto truth =
          BestCompletion(b, testing::ToMask(inc.selected()), k, zm, om);
      const auto lb = lower_bound(model, zero, one);
      if (truth) {
        ASSERT_TRUE(lb.has_value()) << trial << '/' << node;
        ASSERT_LE(*lb, static_cast<double>(*truth) + 1e-6);
      }
      const auto fix = propagate(model, zero, one);
      if (truth) {
        ASSERT_TRUE(fix.has_value());
        // Extended fixings keep the optimum reachable.
        Mask z2 = 0, o2 = 0;
        for (Column j : fix->fixed_zero) z2 |= Mask{1} << j;
        for (Column j : fix->fixed_one) o2 |= Mask{1} << j;
        ASSERT_EQ((z2 & zm), zm);
        ASSERT_EQ((o2 & om), om);
        const auto after =
            BestCompletion(b, testing::ToMask(inc.selected()), k, z2, o2);
        ASSERT_EQ(after, truth);
      }
    }
  }
}

TEST(SelectBranchTest, Examples) {
  const Instance inst = TwoRowToy();
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{2});
  const NsopModel model = build_nsop(inst, inc, 3);
  EXPECT_EQ(select_branch_variable(std::vector<double>{0.5, 0.0, 1.0}, model), 0);
  EXPECT_EQ(select_branch_variable(std::vector<double>{0.4, 0.5, 0.6}, model), 1);
  EXPECT_EQ(select_branch_variable(std::vector<double>{0.5, 0.5, 0.0}, model), 0);
  EXPECT_THROW(select_branch_variable(std::vector<double>{0.0, 1.0, 1.0}, model),
               ContractViolation);
  EXPECT_THROW(select_branch_variable(std::vector<double>{0.5}, model),
               ContractViolation);
}

TEST(PropagateTest, LastSupportForcesColumn) {
  // Row 1 is covered only by column 1.
  const Instance inst = Instance::Create("x", {2, 1, 1}, {{0, 2}, {1}});
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{0, 1});
  const auto fix = propagate(build_nsop(inst, inc, 3), {}, {});
  ASSERT_TRUE(fix.has_value());
  // Column 1 is forced; the cap then excludes column 0, which forces 2.
  EXPECT_EQ(fix->fixed_one, (ColumnSet{1, 2}));
  EXPECT_EQ(fix->fixed_zero, (ColumnSet{0}));
}

TEST(PropagateTest, BandViolationPrunes) {
  const Instance inst = Instance::Create("x", {1, 1, 1, 1}, {{0, 1, 2, 3}});
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{0, 1});
  const NsopModel model = build_nsop(inst, inc, 1);
  // Dropping both incumbent columns flips two coordinates; K = 1.
  EXPECT_FALSE(propagate(model, ColumnSet{0, 1}, {}).has_value());
}

TEST(PropagateTest, CutPrunesAtIncumbentCost) {
  const Instance inst = Instance::Create("x", {2, 3, 4}, {{0, 1, 2}});
  const auto inc = Solution::FromColumns(inst, std::vector<Column>{1});
  const NsopModel model = build_nsop(inst, inc, 3);
  EXPECT_FALSE(propagate(model, {}, ColumnSet{1}).has_value());
}

TEST(SolverConfigTest, Validate) {
  SolverConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.time_limit = Seconds(0);
  EXPECT_THROW(c.Validate(), ContractViolation);
  c = SolverConfig{};
  c.lp_tolerance = 1e-3;
  EXPECT_THROW(c.Validate(), ContractViolation);
  c.lp_tolerance = 0;
  EXPECT_THROW(c.Validate(), ContractViolation);
  c = SolverConfig{};
  c.node_limit = -1;
  EXPECT_THROW(c.Validate(), ContractViolation);
}

TEST(SolveTest, AnytimeMonotonicity) {
  testing::Rng rng(54);
  for (int trial = 0; trial < 3; ++trial) {
    const Instance inst = testing::RandomOrlibLikeInstance(rng, 60, 300, 0.05);
    const Solution inc = remove_redundant(inst, greedy_construct(inst));
    SolverConfig config;
    config.time_limit = Seconds(5);
    config.record_progress = true;
    const SolveOutcome out = solve(build_nsop(inst, inc, 20), config);
    std::optional<Cost> last_inc;
    double last_lb = -std::numeric_limits<double>::infinity();
    for (const ProgressEvent& e : out.progress) {
      if (last_inc && e.incumbent) ASSERT_LE(*e.incumbent, *last_inc);
      if (last_inc) ASSERT_TRUE(e.incumbent.has_value());
      ASSERT_GE(e.lower_bound, last_lb - 1e-9);
      last_inc = e.incumbent;
      last_lb = e.lower_bound;
    }
    std::ostringstream text;
    write_progress(out, text);
    int lines = 0;
    for (char ch : text.str()) lines += ch == '\n';
    EXPECT_EQ(lines, static_cast<int>(out.progress.size()));
  }
}

TEST(SolveTest, DeterministicWithNodeBudget) {
  testing::Rng rng(55);
  const Instance inst = testing::RandomOrlibLikeInstance(rng, 200, 1000, 0.02);
  const Solution inc = remove_redundant(inst, greedy_construct(inst));
  SolverConfig config;
  config.node_limit = 40;
  config.deterministic = true;
  const NsopModel model = build_nsop(inst, inc, 60);
  const SolveOutcome a = solve(model, config);
  const SolveOutcome b = solve(model, config);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
  ASSERT_EQ(a.best.has_value(), b.best.has_value());
  if (a.best) EXPECT_EQ(a.best->selected(), b.best->selected());
  EXPECT_LE(a.nodes_explored, 40);
}

TEST(SolveTest, HonoursTimeLimit) {
  testing::Rng rng(56);
  const Instance inst = testing::RandomOrlibLikeInstance(rng, 400, 4000, 0.05);
  const Solution inc = remove_redundant(inst, greedy_construct(inst));
  SolverConfig config;
  config.time_limit = Seconds(0.5);
  const NsopModel model = build_nsop(inst, inc, 200);
  const SolveOutcome out = solve(model, config);
  EXPECT_LT(out.elapsed.count(), 5.0);
  if (!is_proven(out.status)) {
    EXPECT_EQ(out.best.has_value(),
              out.status == SolveStatus::kFeasibleTimeLimit);
  }
  if (out.best) EXPECT_TRUE(is_nsop_feasible(model, out.best->selected()));
}

TEST(SolveStatusTest, Names) {
  EXPECT_EQ(to_string(SolveStatus::kProvenOptimal), "optimal");
  EXPECT_EQ(to_string(SolveStatus::kProvenInfeasible), "infeasible");
  EXPECT_TRUE(has_solution(SolveStatus::kFeasibleTimeLimit));
  EXPECT_FALSE(has_solution(SolveStatus::kUnknownTimeLimit));
  EXPECT_FALSE(is_proven(SolveStatus::kFeasibleTimeLimit));
}

}  // namespace
}  // namespace nsop
