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

#include "relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nsop::internal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTolerance = 1e-9;
constexpr double kZeroTolerance = 1e-11;
// Consecutive dual-degenerate pivots before switching to Bland's rule.
constexpr int kBlandThreshold = 200;
constexpr int kMaxResets = 3;

}  // namespace

NsopRelaxation::NsopRelaxation(const NsopModel& model, double tolerance)
    : model_(&model),
      num_cols_(model.base().num_cols()),
      num_rows_(model.base().num_rows() + 2),
      band_row_(model.base().num_rows()),
      cut_row_(model.base().num_rows() + 1),
      tol_(tolerance) {
  const Instance& inst = model.base();
  const int n = num_cols_;
  const int total = NumVars();

  col_start_.reserve(n + 1);
  col_start_.push_back(0);
  for (Column j = 0; j < n; ++j) {
    for (const int i : inst.column(j)) {
      row_index_.push_back(i);
      value_.push_back(1.0);
    }
    row_index_.push_back(band_row_);
    value_.push_back(model.in_incumbent(j) ? -1.0 : 1.0);
    if (inst.cost(j) != 0) {
      row_index_.push_back(cut_row_);
      value_.push_back(static_cast<double>(inst.cost(j)));
    }
    col_start_.push_back(static_cast<int>(row_index_.size()));
  }

  cost_.assign(total, 0.0);
  for (Column j = 0; j < n; ++j) cost_[j] = static_cast<double>(inst.cost(j));

  lb_.assign(total, 0.0);
  ub_.assign(total, 1.0);
  for (int i = 0; i < inst.num_rows(); ++i) {
    lb_[n + i] = inst.rhs(i);
    ub_[n + i] = kInf;
  }
  const double ones = static_cast<double>(model.incumbent().size());
  lb_[n + band_row_] = 1.0 - ones;
  ub_[n + band_row_] = model.k() - ones;
  lb_[n + cut_row_] = -kInf;
  ub_[n + cut_row_] = static_cast<double>(model.improvement_rhs());

  state_.assign(total, kAtLower);
  head_.resize(num_rows_);
  x_.assign(total, 0.0);
  d_.assign(total, 0.0);
  bound_d_.assign(n, 0.0);
  refactor_interval_ = std::max(64, num_rows_ / 3);
  ResetBasis();
}

double NsopRelaxation::ColumnDot(int var, const Eigen::VectorXd& v) const {
  if (var >= num_cols_) return -v[var - num_cols_];
  double s = 0.0;
  for (int k = col_start_[var]; k < col_start_[var + 1]; ++k) {
    s += v[row_index_[k]] * value_[k];
  }
  return s;
}

void NsopRelaxation::AddColumn(int var, double scale,
                               Eigen::VectorXd& v) const {
  if (var >= num_cols_) {
    v[var - num_cols_] -= scale;
    return;
  }
  for (int k = col_start_[var]; k < col_start_[var + 1]; ++k) {
    v[row_index_[k]] += scale * value_[k];
  }
}

void NsopRelaxation::ResetBasis() {
  for (Column j = 0; j < num_cols_; ++j) {
    state_[j] = kAtLower;
    x_[j] = lb_[j];
    d_[j] = cost_[j];
  }
  for (int i = 0; i < num_rows_; ++i) {
    head_[i] = num_cols_ + i;
    state_[num_cols_ + i] = kBasic;
    d_[num_cols_ + i] = 0.0;
  }
  binv_ = -Eigen::MatrixXd::Identity(num_rows_, num_rows_);
  updates_since_refactor_ = 0;
  ComputePrimal();
}

bool NsopRelaxation::Refactor() {
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(num_rows_, num_rows_);
  for (int r = 0; r < num_rows_; ++r) {
    const int var = head_[r];
    if (var >= num_cols_) {
      basis(var - num_cols_, r) = -1.0;
    } else {
      for (int k = col_start_[var]; k < col_start_[var + 1]; ++k) {
        basis(row_index_[k], r) = value_[k];
      }
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis);
  updates_since_refactor_ = 0;
  if (!(lu.rcond() > 1e-13)) return false;
  binv_ = lu.inverse();
  return binv_.allFinite();
}

void NsopRelaxation::ComputePrimal() {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(num_rows_);
  for (int var = 0; var < NumVars(); ++var) {
    if (state_[var] != kBasic && x_[var] != 0.0) AddColumn(var, x_[var], acc);
  }
  const Eigen::VectorXd xb = -(binv_ * acc);
  for (int r = 0; r < num_rows_; ++r) x_[head_[r]] = xb[r];
}

void NsopRelaxation::ComputeDuals() {
  Eigen::VectorXd cb(num_rows_);
  for (int r = 0; r < num_rows_; ++r) cb[r] = cost_[head_[r]];
  const Eigen::VectorXd y = binv_.transpose() * cb;
  for (int var = 0; var < NumVars(); ++var) {
    d_[var] = state_[var] == kBasic ? 0.0 : cost_[var] - ColumnDot(var, y);
  }
}

bool NsopRelaxation::RepairDualFeasibility() {
  bool moved = false;
  for (int var = 0; var < NumVars(); ++var) {
    if (state_[var] == kBasic || lb_[var] == ub_[var]) continue;
    if (state_[var] == kAtLower && d_[var] < -tol_) {
      if (ub_[var] == kInf) return false;
      state_[var] = kAtUpper;
      x_[var] = ub_[var];
      moved = true;
    } else if (state_[var] == kAtUpper && d_[var] > tol_) {
      if (lb_[var] == -kInf) return false;
      state_[var] = kAtLower;
      x_[var] = lb_[var];
      moved = true;
    }
  }
  if (moved) ComputePrimal();
  return true;
}

void NsopRelaxation::SetColumnFixings(std::span<const std::int8_t> fix) {
  for (Column j = 0; j < num_cols_; ++j) {
    const double lo = fix[j] == kFixOne ? 1.0 : 0.0;
    const double hi = fix[j] == kFixZero ? 0.0 : 1.0;
    lb_[j] = lo;
    ub_[j] = hi;
    if (state_[j] == kBasic) continue;
    if (lo == hi || d_[j] >= 0.0) {
      state_[j] = kAtLower;
      x_[j] = lo;
    } else {
      state_[j] = kAtUpper;
      x_[j] = hi;
    }
  }
  ComputePrimal();
}

void NsopRelaxation::SetObjectiveCap(double cap) {
  const int var = num_cols_ + cut_row_;
  if (ub_[var] == cap) return;
  ub_[var] = cap;
  if (state_[var] != kBasic) {
    x_[var] = cap;
    ComputePrimal();
  }
}

double NsopRelaxation::Objective() const {
  double z = 0.0;
  for (Column j = 0; j < num_cols_; ++j) z += cost_[j] * x_[j];
  return z;
}

bool NsopRelaxation::CertifyInfeasible(const Eigen::VectorXd& rho,
                                       double sign) const {
  // Along the dual ray y + t * sign * rho the Lagrangian bound grows at
  // least at rate phi; phi > 0 proves the primal empty.
  double phi = 0.0;
  for (int var = 0; var < NumVars(); ++var) {
    const double dd = -sign * ColumnDot(var, rho);
    if (std::abs(dd) <= kZeroTolerance) continue;
    if (dd > 0.0) {
      if (lb_[var] == -kInf) return false;
      phi += dd * lb_[var];
    } else {
      if (ub_[var] == kInf) return false;
      phi += dd * ub_[var];
    }
  }
  return phi > 1e-9;
}

double NsopRelaxation::DualBound() {
  Eigen::VectorXd cb(num_rows_);
  for (int r = 0; r < num_rows_; ++r) cb[r] = cost_[head_[r]];
  Eigen::VectorXd y = binv_.transpose() * cb;
  const int m = num_rows_ - 2;
  for (int i = 0; i < m; ++i) y[i] = std::max(0.0, y[i]);
  y[cut_row_] = std::min(0.0, y[cut_row_]);

  double bound = 0.0;
  for (int i = 0; i < m; ++i) bound += y[i] * lb_[num_cols_ + i];
  const int band = num_cols_ + band_row_;
  bound += std::min(y[band_row_] * lb_[band], y[band_row_] * ub_[band]);
  if (y[cut_row_] != 0.0) bound += y[cut_row_] * ub_[num_cols_ + cut_row_];
  for (Column j = 0; j < num_cols_; ++j) {
    const double dj = cost_[j] - ColumnDot(j, y);
    bound_d_[j] = dj;
    bound += dj > 0.0 ? dj * lb_[j] : dj * ub_[j];
  }
  return bound;
}

NsopRelaxation::Status NsopRelaxation::Solve(const Deadline& deadline) {
  int resets = 0;
  auto reset = [&]() {
    ++resets;
    ResetBasis();
  };

  ComputeDuals();
  if (!RepairDualFeasibility()) reset();

  const std::int64_t limit = iterations_ + 50LL * NumVars() + 1000;
  const int total = NumVars();
  std::vector<double> alpha(total, 0.0);
  Eigen::VectorXd rho(num_rows_);
  Eigen::VectorXd aq(num_rows_);
  int degenerate = 0;
  bool fresh = false;  // primal/dual values recomputed since last pivot

  while (true) {
    if (resets > kMaxResets) return Status::kNumericalTrouble;
    if (deadline.Expired()) return Status::kTimeLimit;
    if (iterations_ > limit) return Status::kNumericalTrouble;

    if (updates_since_refactor_ >= refactor_interval_) {
      if (!Refactor()) {
        reset();
        continue;
      }
      ComputePrimal();
      ComputeDuals();
      if (!RepairDualFeasibility()) {
        reset();
        continue;
      }
      fresh = true;
    }

    // Leaving row: largest squared infeasibility over steepest-edge weight.
    const bool bland = degenerate > kBlandThreshold;
    int r = -1;
    double best = 0.0;
    for (int i = 0; i < num_rows_; ++i) {
      const int var = head_[i];
      const double v = x_[var];
      double infeas = 0.0;
      if (v < lb_[var] - tol_) {
        infeas = lb_[var] - v;
      } else if (v > ub_[var] + tol_) {
        infeas = v - ub_[var];
      }
      if (infeas <= 0.0) continue;
      if (bland) {
        if (r < 0 || var < head_[r]) r = i;
        continue;
      }
      const double w = std::max(binv_.row(i).squaredNorm(), 1e-12);
      const double score = infeas * infeas / w;
      if (score > best) {
        best = score;
        r = i;
      }
    }

    if (r < 0) {
      if (!fresh && updates_since_refactor_ > 0) {
        ComputePrimal();
        ComputeDuals();
        if (!RepairDualFeasibility()) {
          reset();
          continue;
        }
        fresh = true;
        continue;
      }
      return Status::kOptimal;
    }

    const int leaving = head_[r];
    const double target =
        x_[leaving] < lb_[leaving] ? lb_[leaving] : ub_[leaving];
    const double delta = x_[leaving] - target;
    const double sign = delta > 0.0 ? 1.0 : -1.0;

    rho = binv_.row(r).transpose();
    for (int var = 0; var < total; ++var) {
      alpha[var] = state_[var] == kBasic ? 0.0 : ColumnDot(var, rho);
    }

    // Harris two-pass ratio test on d_j / (sign * alpha_j).
    double t_max = kInf;
    for (int var = 0; var < total; ++var) {
      if (state_[var] == kBasic || lb_[var] == ub_[var]) continue;
      const double a = sign * alpha[var];
      if (state_[var] == kAtLower && a > kPivotTolerance) {
        t_max = std::min(t_max, (d_[var] + tol_) / a);
      } else if (state_[var] == kAtUpper && a < -kPivotTolerance) {
        t_max = std::min(t_max, (d_[var] - tol_) / a);
      }
    }
    int q = -1;
    if (t_max < kInf) {
      double best_pivot = 0.0;
      double best_ratio = kInf;
      for (int var = 0; var < total; ++var) {
        if (state_[var] == kBasic || lb_[var] == ub_[var]) continue;
        const double a = sign * alpha[var];
        const bool eligible =
            (state_[var] == kAtLower && a > kPivotTolerance) ||
            (state_[var] == kAtUpper && a < -kPivotTolerance);
        if (!eligible) continue;
        const double ratio = std::max(0.0, d_[var] / a);
        if (bland) {
          if (ratio < best_ratio - 1e-12) {
            best_ratio = ratio;
            q = var;
          }
        } else if (ratio <= t_max && std::abs(a) > best_pivot) {
          best_pivot = std::abs(a);
          q = var;
        }
      }
    }

    if (q < 0) {
      if (!fresh && updates_since_refactor_ > 0) {
        updates_since_refactor_ = refactor_interval_;
        continue;
      }
      if (CertifyInfeasible(rho, sign)) return Status::kInfeasible;
      if (resets == 0) {
        reset();
        continue;
      }
      return Status::kNumericalTrouble;
    }

    aq.setZero();
    if (q >= num_cols_) {
      aq = -binv_.col(q - num_cols_);
    } else {
      for (int k = col_start_[q]; k < col_start_[q + 1]; ++k) {
        aq.noalias() += value_[k] * binv_.col(row_index_[k]);
      }
    }
    const double pivot = aq[r];
    if (std::abs(pivot) < kZeroTolerance ||
        std::abs(pivot - alpha[q]) > 1e-6 * (1.0 + std::abs(pivot))) {
      if (updates_since_refactor_ == 0) {
        reset();
      } else {
        updates_since_refactor_ = refactor_interval_;
      }
      continue;
    }

    const double theta_d = d_[q] / pivot;
    for (int var = 0; var < total; ++var) {
      if (state_[var] != kBasic) d_[var] -= theta_d * alpha[var];
    }
    d_[leaving] = -theta_d;
    d_[q] = 0.0;

    const double theta_p = delta / pivot;
    for (int i = 0; i < num_rows_; ++i) x_[head_[i]] -= theta_p * aq[i];
    x_[q] += theta_p;
    x_[leaving] = target;

    state_[leaving] = target == lb_[leaving] ? kAtLower : kAtUpper;
    state_[q] = kBasic;
    head_[r] = q;

    const Eigen::RowVectorXd pivot_row = binv_.row(r) / pivot;
    binv_.noalias() -= aq * pivot_row;
    binv_.row(r) = pivot_row;

    ++updates_since_refactor_;
    ++iterations_;
    fresh = false;
    degenerate = std::abs(theta_d) < 1e-12 ? degenerate + 1 : 0;
  }
}

}  // namespace nsop::internal
