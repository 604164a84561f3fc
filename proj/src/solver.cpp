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

#include "nsop/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <set>
#include <utility>

#include "nsop/errors.hpp"
#include "relaxation.hpp"

namespace nsop {

namespace internal {

struct PropagationResult {
  bool feasible = false;
  // Cost of the fixed ones plus, over rows still needing cover, the largest
  // cheapest-free-column cost.
  Cost bound = 0;
};

// Fixpoint of the node implications, applied in place to `fix`. `cap` is the
// largest admissible objective value.
PropagationResult Propagate(const NsopModel& model, Cost cap,
                            std::vector<std::int8_t>& fix) {
  const Instance& inst = model.base();
  const int n = inst.num_cols();
  const int k = model.k();

  while (true) {
    Cost fixed_cost = 0;
    int distance = 0;
    int free_count = 0;
    for (Column j = 0; j < n; ++j) {
      if (fix[j] == kFree) {
        ++free_count;
        continue;
      }
      if (fix[j] == kFixOne) fixed_cost += inst.cost(j);
      if ((fix[j] == kFixOne) != model.in_incumbent(j)) ++distance;
    }
    if (fixed_cost > cap || distance > k) return {};
    if (free_count == 0 && distance == 0) return {};

    bool changed = false;
    if (distance == k && free_count > 0) {
      // Band is exhausted: every free column keeps its incumbent value.
      for (Column j = 0; j < n; ++j) {
        if (fix[j] == kFree) fix[j] = model.in_incumbent(j) ? kFixOne : kFixZero;
      }
      continue;
    }
    for (Column j = 0; j < n; ++j) {
      if (fix[j] == kFree && fixed_cost + inst.cost(j) > cap) {
        fix[j] = kFixZero;
        changed = true;
      }
    }
    if (changed) continue;

    Cost row_bound = 0;
    for (int i = 0; i < inst.num_rows(); ++i) {
      int have = 0;
      int avail = 0;
      Cost cheapest = std::numeric_limits<Cost>::max();
      for (const Column j : inst.row(i)) {
        if (fix[j] == kFixOne) {
          ++have;
        } else if (fix[j] == kFree) {
          ++avail;
          cheapest = std::min(cheapest, inst.cost(j));
        }
      }
      if (have >= inst.rhs(i)) continue;
      if (have + avail < inst.rhs(i)) return {};
      if (have + avail == inst.rhs(i)) {
        for (const Column j : inst.row(i)) {
          if (fix[j] == kFree) fix[j] = kFixOne;
        }
        changed = true;
      } else {
        row_bound = std::max(row_bound, cheapest);
      }
    }
    if (changed) continue;
    if (fixed_cost + row_bound > cap) return {};
    return {true, fixed_cost + row_bound};
  }
}

}  // namespace internal

namespace {

using internal::Fix;
using internal::kFixOne;
using internal::kFixZero;
using internal::kFree;

constexpr double kIntegralityTolerance = 1e-6;
constexpr double kBoundSlack = 1e-6;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::vector<std::int8_t> FixVector(const NsopModel& model,
                                   std::span<const Column> fixed_zero,
                                   std::span<const Column> fixed_one) {
  const int n = model.base().num_cols();
  std::vector<std::int8_t> fix(n, kFree);
  for (const Column j : normalize_columns(fixed_zero, n)) fix[j] = kFixZero;
  for (const Column j : normalize_columns(fixed_one, n)) {
    if (fix[j] == kFixZero) {
      throw ContractViolation("column " + std::to_string(j) +
                              " fixed to both 0 and 1");
    }
    fix[j] = kFixOne;
  }
  return fix;
}

// Lowest integer >= value, robust to tiny floating error.
double RoundUpBound(double value) { return std::ceil(value - kBoundSlack); }

struct Node {
  std::vector<std::pair<Column, std::int8_t>> decisions;
  double bound = 0.0;
};

class BranchAndBound {
 public:
  BranchAndBound(const NsopModel& model, const SolverConfig& config)
      : model_(model),
        config_(config),
        n_(model.base().num_cols()),
        cap_(model.improvement_rhs()),
        lp_(model, config.lp_tolerance) {}

  SolveOutcome Run();

 private:
  double GlobalBound() const {
    double lb = open_bounds_.empty() ? kInfinity : *open_bounds_.begin();
    if (best_) lb = std::min(lb, static_cast<double>(best_->cost()));
    return lb;
  }
  Seconds Elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }
  void Push(Node node) {
    open_bounds_.insert(node.bound);
    stack_.push_back(std::move(node));
  }
  void NoteProgress(bool force);
  // Accepts `columns` if it is NSOP-feasible and beats the best so far.
  bool TryAccept(const ColumnSet& columns);

  const NsopModel& model_;
  const SolverConfig& config_;
  const int n_;
  Cost cap_;
  internal::NsopRelaxation lp_;
  std::optional<Solution> best_;
  std::vector<Node> stack_;
  std::multiset<double> open_bounds_;
  std::chrono::steady_clock::time_point start_;
  SolveOutcome out_;
  double last_bound_ = -kInfinity;
};

void BranchAndBound::NoteProgress(bool force) {
  if (!config_.record_progress) return;
  const double bound = GlobalBound();
  if (!force && !(bound > last_bound_)) return;
  last_bound_ = std::max(last_bound_, bound);
  ProgressEvent e;
  e.elapsed = Elapsed();
  e.nodes = out_.nodes_explored;
  if (best_) e.incumbent = best_->cost();
  e.lower_bound = last_bound_;
  out_.progress.push_back(e);
}

bool BranchAndBound::TryAccept(const ColumnSet& columns) {
  const Solution candidate = Solution::FromColumns(model_.base(), columns);
  if (candidate.cost() > cap_) return false;
  if (!is_nsop_feasible(model_, candidate.selected())) return false;
  best_ = candidate;
  cap_ = candidate.cost() - 1;
  NoteProgress(true);
  return true;
}

SolveOutcome BranchAndBound::Run() {
  start_ = std::chrono::steady_clock::now();
  internal::Deadline deadline;
  if (!(config_.deterministic && config_.node_limit)) {
    deadline.at = start_ + std::chrono::duration_cast<
                               std::chrono::steady_clock::duration>(
                               config_.time_limit);
  }

  const Instance& inst = model_.base();
  std::vector<std::int8_t> fix(n_);
  std::vector<std::pair<Column, std::int8_t>> implied;
  bool stopped = false;

  Push(Node{{}, 0.0});
  NoteProgress(true);

  while (!stack_.empty()) {
    if (deadline.Expired() ||
        (config_.node_limit && out_.nodes_explored >= *config_.node_limit)) {
      stopped = true;
      break;
    }
    Node node = std::move(stack_.back());
    stack_.pop_back();
    open_bounds_.erase(open_bounds_.find(node.bound));
    if (node.bound > static_cast<double>(cap_)) {
      NoteProgress(false);
      continue;
    }
    ++out_.nodes_explored;

    std::fill(fix.begin(), fix.end(), kFree);
    for (const auto& [j, v] : node.decisions) fix[j] = v;
    const internal::PropagationResult prop =
        internal::Propagate(model_, cap_, fix);
    if (!prop.feasible) {
      NoteProgress(false);
      continue;
    }
    const auto free_count = std::count(fix.begin(), fix.end(), kFree);
    if (free_count == 0) {
      ColumnSet point;
      for (Column j = 0; j < n_; ++j) {
        if (fix[j] == kFixOne) point.push_back(j);
      }
      TryAccept(point);
      NoteProgress(false);
      continue;
    }

    lp_.SetObjectiveCap(static_cast<double>(cap_));
    lp_.SetColumnFixings(fix);
    const auto status = lp_.Solve(deadline);
    if (status == internal::NsopRelaxation::Status::kTimeLimit) {
      Push(std::move(node));
      stopped = true;
      break;
    }
    if (status == internal::NsopRelaxation::Status::kInfeasible) {
      NoteProgress(false);
      continue;
    }

    double node_bound = node.bound;
    Column branch = -1;
    implied.clear();
    if (status == internal::NsopRelaxation::Status::kOptimal) {
      const double z = lp_.DualBound();
      node_bound = std::max(node_bound, RoundUpBound(z));
      if (node_bound > static_cast<double>(cap_)) {
        NoteProgress(false);
        continue;
      }
      const auto x = lp_.Primal();
      bool integral = true;
      for (Column j = 0; j < n_ && integral; ++j) {
        if (std::abs(x[j] - std::round(x[j])) > kIntegralityTolerance) {
          integral = false;
        }
      }
      if (integral) {
        ColumnSet point;
        for (Column j = 0; j < n_; ++j) {
          if (x[j] > 0.5) point.push_back(j);
        }
        TryAccept(point);
        if (node_bound > static_cast<double>(cap_)) {
          NoteProgress(false);
          continue;
        }
      } else {
        branch = select_branch_variable(x, model_);
      }
      // Reduced-cost fixing against the current cap.
      for (Column j = 0; j < n_; ++j) {
        if (fix[j] != kFree || j == branch) continue;
        const double dj = lp_.BoundReducedCost(j);
        if (dj > 0.0 && z + dj - kBoundSlack > static_cast<double>(cap_)) {
          implied.emplace_back(j, kFixZero);
        } else if (dj < 0.0 &&
                   z - dj - kBoundSlack > static_cast<double>(cap_)) {
          implied.emplace_back(j, kFixOne);
        }
      }
    } else {
      // Relaxation failed: keep going on the combinatorial bound.
      ++out_.numerical_fallbacks;
      std::cerr << "nsop: relaxation failed numerically on " << inst.name()
                << " node " << out_.nodes_explored
                << ", using combinatorial bound\n";
      lp_.ResetBasis();
      node_bound = std::max(node_bound, static_cast<double>(prop.bound));
      if (node_bound > static_cast<double>(cap_)) continue;
    }
    if (branch < 0) {
      for (Column j = 0; j < n_; ++j) {
        if (fix[j] != kFree) continue;
        if (std::find_if(implied.begin(), implied.end(), [j](const auto& p) {
              return p.first == j;
            }) != implied.end()) {
          continue;
        }
        branch = j;
        break;
      }
      if (branch < 0) {
        // Every column is decided by the implied fixings.
        Node leaf{node.decisions, node_bound};
        leaf.decisions.insert(leaf.decisions.end(), implied.begin(),
                              implied.end());
        Push(std::move(leaf));
        continue;
      }
    }

    Node down{std::move(node.decisions), node_bound};
    down.decisions.insert(down.decisions.end(), implied.begin(),
                          implied.end());
    Node up{down.decisions, node_bound};
    down.decisions.emplace_back(branch, kFixZero);
    up.decisions.emplace_back(branch, kFixOne);
    Push(std::move(down));
    Push(std::move(up));
    NoteProgress(false);
  }

  out_.lp_iterations = lp_.iterations();
  out_.best = best_;
  if (!stopped) {
    out_.status = best_ ? SolveStatus::kProvenOptimal
                        : SolveStatus::kProvenInfeasible;
    out_.lower_bound =
        best_ ? static_cast<double>(best_->cost()) : kInfinity;
  } else {
    out_.status = best_ ? SolveStatus::kFeasibleTimeLimit
                        : SolveStatus::kUnknownTimeLimit;
    out_.lower_bound = GlobalBound();
  }
  out_.elapsed = Elapsed();
  if (config_.record_progress) {
    ProgressEvent e;
    e.elapsed = out_.elapsed;
    e.nodes = out_.nodes_explored;
    if (best_) e.incumbent = best_->cost();
    e.lower_bound = std::max(last_bound_, out_.lower_bound);
    out_.progress.push_back(e);
  }
  return std::move(out_);
}

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kProvenOptimal:
      return "optimal";
    case SolveStatus::kProvenInfeasible:
      return "infeasible";
    case SolveStatus::kFeasibleTimeLimit:
      return "feasible_time_limit";
    case SolveStatus::kUnknownTimeLimit:
      return "unknown_time_limit";
  }
  return "?";
}

void SolverConfig::Validate() const {
  if (!(time_limit.count() > 0)) {
    throw ContractViolation("solver time limit must be positive");
  }
  if (node_limit && *node_limit < 0) {
    throw ContractViolation("node limit must be non-negative");
  }
  if (!(lp_tolerance > 0 && lp_tolerance <= 1e-4)) {
    throw ContractViolation("lp_tolerance must lie in (0, 1e-4]");
  }
}

SolveOutcome solve(const NsopModel& model, const SolverConfig& config) {
  config.Validate();
  BranchAndBound bb(model, config);
  return bb.Run();
}

std::optional<double> lower_bound(const NsopModel& model,
                                  std::span<const Column> fixed_zero,
                                  std::span<const Column> fixed_one) {
  std::vector<std::int8_t> fix = FixVector(model, fixed_zero, fixed_one);
  internal::NsopRelaxation lp(model, 1e-7);
  lp.SetColumnFixings(fix);
  switch (lp.Solve(internal::Deadline{})) {
    case internal::NsopRelaxation::Status::kOptimal:
      return lp.DualBound();
    case internal::NsopRelaxation::Status::kInfeasible:
      return std::nullopt;
    default:
      break;
  }
  const auto prop = internal::Propagate(model, model.improvement_rhs(), fix);
  if (!prop.feasible) return std::nullopt;
  return static_cast<double>(prop.bound);
}

Column select_branch_variable(std::span<const double> point,
                              const NsopModel& model) {
  if (static_cast<int>(point.size()) != model.base().num_cols()) {
    throw ContractViolation("relaxation point has wrong dimension");
  }
  Column best = -1;
  double best_frac = kIntegralityTolerance;
  for (std::size_t j = 0; j < point.size(); ++j) {
    const double frac = std::abs(point[j] - std::round(point[j]));
    if (frac > best_frac + 1e-12) {
      best_frac = frac;
      best = static_cast<Column>(j);
    }
  }
  if (best < 0) {
    throw ContractViolation("select_branch_variable on an integral point");
  }
  return best;
}

std::optional<Fixings> propagate(const NsopModel& model,
                                 std::span<const Column> fixed_zero,
                                 std::span<const Column> fixed_one) {
  std::vector<std::int8_t> fix = FixVector(model, fixed_zero, fixed_one);
  if (!internal::Propagate(model, model.improvement_rhs(), fix).feasible) {
    return std::nullopt;
  }
  Fixings out;
  for (Column j = 0; j < static_cast<Column>(fix.size()); ++j) {
    if (fix[j] == kFixZero) out.fixed_zero.push_back(j);
    if (fix[j] == kFixOne) out.fixed_one.push_back(j);
  }
  return out;
}

void write_progress(const SolveOutcome& outcome, std::ostream& out) {
  for (const ProgressEvent& e : outcome.progress) {
    out << e.elapsed.count() << ' ' << e.nodes << ' ';
    if (e.incumbent) {
      out << *e.incumbent;
    } else {
      out << '-';
    }
    out << ' ' << e.lower_bound << '\n';
  }
}

}  // namespace nsop
