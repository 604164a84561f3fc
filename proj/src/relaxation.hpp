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

// Linear relaxation of an NSOP, solved with a bounded-variable dual simplex.
//
// Rows are written as A x - r = 0 with one logical r_i per row:
//   cover rows   r_i in [b_i, +inf)
//   band row     r   in [1 - |X|, K - |X|]   (coefficient -1 if X_j = 1, else +1)
//   cut row      r   in (-inf, cap]          (coefficient c_j)
// Structural bounds encode the branching fixings. Because every cost is
// non-negative, the all-logical basis with x = 0 is dual feasible, so the
// dual simplex can always (re)start from it.
//
// The basis inverse is kept as a dense matrix and updated by rank-one
// pivots, with periodic refactorisation. Pricing is dual steepest edge with
// exact weights (squared row norms of the inverse); after long degenerate
// runs the choice falls back to Bland's smallest-index rule.
//
// Bounds returned by DualBound() are Lagrangian bounds computed from the
// current duals after sign-clamping, so they are valid lower bounds whatever
// the numerical state of the basis.

#ifndef NSOP_SRC_RELAXATION_HPP_
#define NSOP_SRC_RELAXATION_HPP_

#include <Eigen/Dense>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsop/nsop.hpp"

namespace nsop::internal {

// Per-column fixing state used throughout the branch and bound.
enum Fix : std::int8_t { kFree = -1, kFixZero = 0, kFixOne = 1 };

struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;

  bool Expired() const {
    return at.has_value() && std::chrono::steady_clock::now() >= *at;
  }
};

class NsopRelaxation {
 public:
  enum class Status { kOptimal, kInfeasible, kTimeLimit, kNumericalTrouble };

  NsopRelaxation(const NsopModel& model, double tolerance);

  // Applies column fixings; nonbasic columns are placed on the bound that
  // keeps the current basis dual feasible.
  void SetColumnFixings(std::span<const std::int8_t> fix);

  // Upper bound on the objective, i.e. the improvement cut right-hand side.
  void SetObjectiveCap(double cap);

  Status Solve(const Deadline& deadline);

  // Returns to the all-logical basis.
  void ResetBasis();

  // Valid lower bound from the current duals (see file comment). Also
  // refreshes the reduced costs returned by BoundReducedCost().
  double DualBound();
  double BoundReducedCost(Column j) const { return bound_d_[j]; }

  std::span<const double> Primal() const {
    return std::span<const double>(x_).first(num_cols_);
  }
  double Objective() const;
  bool IsBasic(Column j) const { return state_[j] == kBasic; }

  std::int64_t iterations() const { return iterations_; }

 private:
  enum State : std::int8_t { kBasic, kAtLower, kAtUpper };

  int NumVars() const { return num_cols_ + num_rows_; }
  double ColumnDot(int var, const Eigen::VectorXd& v) const;
  void AddColumn(int var, double scale, Eigen::VectorXd& v) const;
  bool Refactor();
  void ComputePrimal();
  void ComputeDuals();
  // Moves boxed nonbasics with wrong-signed reduced costs to the other
  // bound. Returns false if an unboxed variable is dual infeasible.
  bool RepairDualFeasibility();
  bool CertifyInfeasible(const Eigen::VectorXd& rho, double sign) const;

  const NsopModel* model_;
  int num_cols_;
  int num_rows_;  // cover rows + band + cut
  int band_row_;
  int cut_row_;
  double tol_;

  // Structural columns in compressed sparse column form.
  std::vector<int> col_start_;
  std::vector<int> row_index_;
  std::vector<double> value_;

  std::vector<double> cost_;
  std::vector<double> lb_;
  std::vector<double> ub_;
  std::vector<State> state_;
  std::vector<int> head_;
  std::vector<double> x_;
  std::vector<double> d_;
  std::vector<double> bound_d_;
  Eigen::MatrixXd binv_;

  int updates_since_refactor_ = 0;
  int refactor_interval_;
  std::int64_t iterations_ = 0;
};

}  // namespace nsop::internal

#endif  // NSOP_SRC_RELAXATION_HPP_
