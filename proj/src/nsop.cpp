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

#include "nsop/nsop.hpp"

#include <ostream>
#include <string>
#include <tuple>
#include <utility>

#include "nsop/errors.hpp"

namespace nsop {

NsopModel::NsopModel(const Instance& instance, Solution incumbent, int k)
    : base_(&instance), incumbent_(std::move(incumbent)), k_(k) {
  if (k_ < 1) throw ContractViolation("neighbourhood radius k must be >= 1");
  // Re-derive the cost so a Solution built against another instance of the
  // same shape cannot sneak in a wrong cut.
  incumbent_ = Solution::FromColumns(instance, incumbent_.selected());
  if (!is_feasible_cover(instance, incumbent_.selected())) {
    throw ContractViolation("incumbent is not a feasible cover");
  }
  incumbent_mask_ = incumbent_.mask(instance.num_cols());
}

NsopModel build_nsop(const Instance& instance, const Solution& incumbent,
                     int k) {
  return NsopModel(instance, incumbent, k);
}

int hamming_band_bounds(const NsopModel& model,
                        std::span<const Column> candidate) {
  const int n = model.base().num_cols();
  const ColumnSet x = normalize_columns(candidate, n);
  // sum_{X_j=0} x_j + sum_{X_j=1} (1 - x_j)
  int outside = 0;
  int inside = 0;
  for (const Column j : x) {
    if (model.in_incumbent(j)) {
      ++inside;
    } else {
      ++outside;
    }
  }
  const int incumbent_size = static_cast<int>(model.incumbent().size());
  return outside + (incumbent_size - inside);
}

bool is_nsop_feasible(const NsopModel& model,
                      std::span<const Column> candidate) {
  const Instance& inst = model.base();
  if (!is_feasible_cover(inst, candidate)) return false;
  const int distance = hamming_band_bounds(model, candidate);
  if (distance < 1 || distance > model.k()) return false;
  return cost_of(inst, candidate) <= model.improvement_rhs();
}

void write_nsop_lp(const NsopModel& model, std::ostream& out) {
  const Instance& inst = model.base();
  const int n = inst.num_cols();
  auto var = [](Column j) { return "x" + std::to_string(j + 1); };
  auto wrap = [&out](int& width) {
    if (++width % 10 == 0) out << "\n   ";
  };

  out << "\\ NSOP for " << inst.name() << ", K = " << model.k()
      << ", incumbent cost = " << model.incumbent().cost() << "\n";
  out << "Minimize\n obj:";
  int width = 0;
  for (Column j = 0; j < n; ++j) {
    out << " + " << inst.cost(j) << ' ' << var(j);
    wrap(width);
  }
  out << "\nSubject To\n";
  for (int i = 0; i < inst.num_rows(); ++i) {
    out << " cover" << i + 1 << ':';
    width = 0;
    for (const Column j : inst.row(i)) {
      out << " + " << var(j);
      wrap(width);
    }
    out << " >= " << inst.rhs(i) << '\n';
  }
  // Constant part of the linearised distance moved to the right-hand side.
  const int ones = static_cast<int>(model.incumbent().size());
  for (const auto& [label, sense, bound] :
       {std::tuple{"band_lo", ">=", 1}, std::tuple{"band_hi", "<=", model.k()}}) {
    out << ' ' << label << ':';
    width = 0;
    for (Column j = 0; j < n; ++j) {
      out << (model.in_incumbent(j) ? " - " : " + ") << var(j);
      wrap(width);
    }
    out << ' ' << sense << ' ' << bound - ones << '\n';
  }
  out << " improve:";
  width = 0;
  for (Column j = 0; j < n; ++j) {
    out << " + " << inst.cost(j) << ' ' << var(j);
    wrap(width);
  }
  out << " <= " << model.improvement_rhs() << "\nBinary\n";
  width = 0;
  for (Column j = 0; j < n; ++j) {
    out << ' ' << var(j);
    wrap(width);
  }
  out << "\nEnd\n";
}

}  // namespace nsop
