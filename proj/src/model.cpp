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

#include "nsop/model.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "nsop/errors.hpp"

namespace nsop {

namespace {

void CheckIndex(Column j, int num_cols) {
  if (j < 0 || j >= num_cols) {
    throw ContractViolation("column index " + std::to_string(j) +
                            " outside [0, " + std::to_string(num_cols) + ")");
  }
}

}  // namespace

ColumnSet normalize_columns(std::span<const Column> columns, int num_cols) {
  ColumnSet out(columns.begin(), columns.end());
  for (const Column j : out) CheckIndex(j, num_cols);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Instance Instance::Create(std::string name, std::vector<Cost> costs,
                          std::vector<std::vector<Column>> rows,
                          std::vector<int> rhs) {
  const int n = static_cast<int>(costs.size());
  if (n <= 0) throw ContractViolation("instance needs at least one column");
  if (rows.empty()) throw ContractViolation("instance needs at least one row");
  for (std::size_t j = 0; j < costs.size(); ++j) {
    if (costs[j] < 0) {
      throw ContractViolation("column " + std::to_string(j) +
                              " has negative cost");
    }
  }
  if (rhs.empty()) rhs.assign(rows.size(), 1);
  if (rhs.size() != rows.size()) {
    throw ContractViolation("rhs length differs from number of rows");
  }

  Instance inst;
  inst.name_ = std::move(name);
  inst.columns_.resize(n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i] = normalize_columns(rows[i], n);
    if (rows[i].empty()) {
      throw ContractViolation("row " + std::to_string(i) +
                              " is covered by no column");
    }
    if (rhs[i] < 1 || rhs[i] > static_cast<int>(rows[i].size())) {
      throw ContractViolation("row " + std::to_string(i) +
                              " has unsatisfiable right-hand side");
    }
    for (const Column j : rows[i]) {
      inst.columns_[j].push_back(static_cast<int>(i));
    }
    inst.num_nonzeros_ += static_cast<std::int64_t>(rows[i].size());
  }
  inst.costs_ = std::move(costs);
  inst.rows_ = std::move(rows);
  inst.rhs_ = std::move(rhs);
  return inst;
}

Solution Solution::FromColumns(const Instance& instance,
                               std::span<const Column> columns) {
  Solution s;
  s.selected_ = normalize_columns(columns, instance.num_cols());
  for (const Column j : s.selected_) s.cost_ += instance.cost(j);
  return s;
}

bool Solution::contains(Column j) const {
  return std::binary_search(selected_.begin(), selected_.end(), j);
}

std::vector<std::uint8_t> Solution::mask(int num_cols) const {
  std::vector<std::uint8_t> m(num_cols, 0);
  for (const Column j : selected_) m[j] = 1;
  return m;
}

void SearchParams::Validate() const {
  if (k_init <= 0) throw ContractViolation("k_init must be positive");
  if (delta <= 0) throw ContractViolation("delta must be positive");
  if (l_limit <= 0) throw ContractViolation("l_limit must be positive");
  if (!(nsop_time_limit.count() > 0)) {
    throw ContractViolation("nsop_time_limit must be positive");
  }
}

Cost cost_of(const Instance& instance, std::span<const Column> selected) {
  Cost total = 0;
  for (const Column j : normalize_columns(selected, instance.num_cols())) {
    total += instance.cost(j);
  }
  return total;
}

bool is_feasible_cover(const Instance& instance,
                       std::span<const Column> selected) {
  const ColumnSet cols = normalize_columns(selected, instance.num_cols());
  std::vector<int> covered(instance.num_rows(), 0);
  for (const Column j : cols) {
    for (const int i : instance.column(j)) ++covered[i];
  }
  for (int i = 0; i < instance.num_rows(); ++i) {
    if (covered[i] < instance.rhs(i)) return false;
  }
  return true;
}

int hamming_distance(std::span<const Column> a, std::span<const Column> b,
                     int num_cols) {
  std::vector<std::uint8_t> in_a(num_cols, 0);
  for (const Column j : normalize_columns(a, num_cols)) in_a[j] = 1;
  int distance = 0;
  for (const Column j : normalize_columns(b, num_cols)) {
    if (in_a[j]) {
      in_a[j] = 0;
    } else {
      ++distance;
    }
  }
  for (const std::uint8_t v : in_a) distance += v;
  return distance;
}

double density(const Instance& instance) {
  return 100.0 * static_cast<double>(instance.num_nonzeros()) /
         (static_cast<double>(instance.num_rows()) * instance.num_cols());
}

}  // namespace nsop
