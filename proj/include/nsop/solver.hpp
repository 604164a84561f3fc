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

// Exact 0-1 solver for NSOP models.
//
// Depth-first branch and bound over the columns. Each node runs logical
// propagation (last-support rows, Hamming band accounting, cost accounting)
// and then the linear relaxation of cover rows + band + cut, warm-started
// from the previous node's basis. Nodes whose bound cannot beat the best
// point found are pruned; integral costs allow rounding bounds up.
// Branching takes the most fractional column (lowest index on ties) and
// explores x = 1 first.

#ifndef NSOP_SOLVER_HPP_
#define NSOP_SOLVER_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nsop/model.hpp"
#include "nsop/nsop.hpp"

namespace nsop {

enum class SolveStatus {
  kProvenOptimal,
  kProvenInfeasible,
  kFeasibleTimeLimit,
  kUnknownTimeLimit,
};

std::string_view to_string(SolveStatus status);

inline bool is_proven(SolveStatus s) {
  return s == SolveStatus::kProvenOptimal || s == SolveStatus::kProvenInfeasible;
}

inline bool has_solution(SolveStatus s) {
  return s == SolveStatus::kProvenOptimal || s == SolveStatus::kFeasibleTimeLimit;
}

struct SolverConfig {
  Seconds time_limit{15.0};
  // Budget in explored nodes; exhausting it reports a time-limit status.
  std::optional<std::int64_t> node_limit;
  double lp_tolerance = 1e-7;
  // With a node_limit set, ignore the wall clock so that repeated runs see
  // exactly the same search.
  bool deterministic = false;
  // Record incumbent / bound changes in SolveOutcome::progress.
  bool record_progress = false;

  // Throws ContractViolation.
  void Validate() const;
};

struct ProgressEvent {
  Seconds elapsed{0};
  std::int64_t nodes = 0;
  std::optional<Cost> incumbent;
  double lower_bound = 0.0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnknownTimeLimit;
  std::optional<Solution> best;
  // +infinity when proven infeasible.
  double lower_bound = 0.0;
  std::int64_t nodes_explored = 0;
  Seconds elapsed{0};
  std::int64_t lp_iterations = 0;
  // Nodes where the relaxation failed numerically and the combinatorial
  // bound was used instead.
  int numerical_fallbacks = 0;
  std::vector<ProgressEvent> progress;
};

SolveOutcome solve(const NsopModel& model, const SolverConfig& config);

// Lower bound on the cost of any NSOP-feasible point with the given columns
// fixed, from the linear relaxation. std::nullopt means the node can be
// pruned (relaxation infeasible). Throws ContractViolation if the fixed sets
// intersect.
std::optional<double> lower_bound(const NsopModel& model,
                                  std::span<const Column> fixed_zero,
                                  std::span<const Column> fixed_one);

// Most fractional coordinate of `point`, lowest index on ties. Throws
// ContractViolation if every coordinate is integral.
Column select_branch_variable(std::span<const double> point,
                              const NsopModel& model);

struct Fixings {
  ColumnSet fixed_zero;
  ColumnSet fixed_one;
};

// Closes the fixings under the node implications; std::nullopt means the
// node contains no NSOP-feasible point. Throws ContractViolation if the
// fixed sets intersect.
std::optional<Fixings> propagate(const NsopModel& model,
                                 std::span<const Column> fixed_zero,
                                 std::span<const Column> fixed_one);

// Line-oriented dump of SolveOutcome::progress:
//   <elapsed-seconds> <nodes> <incumbent|-> <lower-bound>
void write_progress(const SolveOutcome& outcome, std::ostream& out);

}  // namespace nsop

#endif  // NSOP_SOLVER_HPP_
