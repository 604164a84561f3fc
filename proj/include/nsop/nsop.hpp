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

// Neighbourhood search optimisation programme (NSOP): the covering problem
// restricted to improved solutions within Hamming distance K of an incumbent
// X. Its feasible set is
//
//   { x binary : x covers every row,
//                1 <= sum_{X_j=0} x_j + sum_{X_j=1} (1 - x_j) <= K,
//                sum_j c_j x_j <= cost(X) - 1 }
//
// so any feasible point strictly improves on X. The model refers to the base
// instance and never materialises the extended constraint matrix.

#ifndef NSOP_NSOP_HPP_
#define NSOP_NSOP_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "nsop/model.hpp"

namespace nsop {

class NsopModel {
 public:
  // `instance` must outlive the model.
  NsopModel(const Instance& instance, Solution incumbent, int k);

  const Instance& base() const { return *base_; }
  const Solution& incumbent() const { return incumbent_; }
  int k() const { return k_; }

  // Right-hand side of the improvement cut: incumbent cost - 1.
  Cost improvement_rhs() const { return incumbent_.cost() - 1; }

  bool in_incumbent(Column j) const { return incumbent_mask_[j] != 0; }
  std::span<const std::uint8_t> incumbent_mask() const {
    return incumbent_mask_;
  }

 private:
  const Instance* base_;
  Solution incumbent_;
  int k_;
  std::vector<std::uint8_t> incumbent_mask_;
};

// Throws ContractViolation if the incumbent is not a feasible cover or k < 1.
NsopModel build_nsop(const Instance& instance, const Solution& incumbent,
                     int k);

// Linearised Hamming distance to the incumbent, evaluated at `candidate`.
int hamming_band_bounds(const NsopModel& model,
                        std::span<const Column> candidate);

bool is_nsop_feasible(const NsopModel& model,
                      std::span<const Column> candidate);

// Debug export in CPLEX LP text format: objective, one row per cover
// constraint, the two Hamming band inequalities and the improvement cut.
void write_nsop_lp(const NsopModel& model, std::ostream& out);

}  // namespace nsop

#endif  // NSOP_NSOP_HPP_
