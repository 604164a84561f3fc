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

// Core types for zero-one covering problems:
//
//   minimise    sum_j c_j x_j
//   subject to  sum_{j in row i} x_j >= b_i   for every row i
//               x_j in {0, 1}
//
// Column indices are 0-based everywhere in the library; the 1-based
// OR-Library convention is converted once, in ingest.

#ifndef NSOP_MODEL_HPP_
#define NSOP_MODEL_HPP_

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nsop {

using Column = std::int32_t;
using Cost = std::int64_t;
using Seconds = std::chrono::duration<double>;

// Sorted, duplicate-free list of column indices.
using ColumnSet = std::vector<Column>;

class Instance {
 public:
  // Validates and normalises (sorts, de-duplicates) the row sets. An empty
  // `rhs` means every right-hand side is 1. Throws ContractViolation when a
  // column index is out of range, a cost is negative, a row is empty, or a
  // right-hand side is not in [1, |row|].
  static Instance Create(std::string name, std::vector<Cost> costs,
                         std::vector<std::vector<Column>> rows,
                         std::vector<int> rhs = {});

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return static_cast<int>(costs_.size()); }
  const std::string& name() const { return name_; }

  std::span<const Cost> costs() const { return costs_; }
  Cost cost(Column j) const { return costs_[j]; }

  std::span<const Column> row(int i) const { return rows_[i]; }
  const std::vector<std::vector<Column>>& rows() const { return rows_; }

  // Rows covered by column j, ascending.
  std::span<const int> column(Column j) const { return columns_[j]; }

  int rhs(int i) const { return rhs_[i]; }
  std::span<const int> rhs() const { return rhs_; }

  std::int64_t num_nonzeros() const { return num_nonzeros_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.name_ == b.name_ && a.costs_ == b.costs_ && a.rows_ == b.rows_ &&
           a.rhs_ == b.rhs_;
  }

 private:
  Instance() = default;

  std::string name_;
  std::vector<Cost> costs_;
  std::vector<std::vector<Column>> rows_;
  std::vector<std::vector<int>> columns_;
  std::vector<int> rhs_;
  std::int64_t num_nonzeros_ = 0;
};

// A zero-one assignment with its cached objective value. The cost is always
// recomputed from the instance at construction, so it cannot go stale.
class Solution {
 public:
  Solution() = default;

  // Throws ContractViolation on an out-of-range column.
  static Solution FromColumns(const Instance& instance,
                              std::span<const Column> columns);

  const ColumnSet& selected() const { return selected_; }
  Cost cost() const { return cost_; }
  bool contains(Column j) const;
  std::size_t size() const { return selected_.size(); }

  // 0/1 indicator vector of length n.
  std::vector<std::uint8_t> mask(int num_cols) const;

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  ColumnSet selected_;
  Cost cost_ = 0;
};

struct SearchParams {
  int k_init = 5;
  int delta = 5;
  int l_limit = 5;
  Seconds nsop_time_limit{15.0};

  // Throws ContractViolation unless every field is strictly positive.
  void Validate() const;
};

// Sum of costs over `selected`. Duplicates are counted once.
Cost cost_of(const Instance& instance, std::span<const Column> selected);

bool is_feasible_cover(const Instance& instance,
                       std::span<const Column> selected);

// |a symmetric-difference b| over columns [0, n).
int hamming_distance(std::span<const Column> a, std::span<const Column> b,
                     int num_cols);

// 100 * (number of ones in the coverage matrix) / (m * n).
double density(const Instance& instance);

// Sorts and removes duplicates; throws if any index is outside [0, n).
ColumnSet normalize_columns(std::span<const Column> columns, int num_cols);

}  // namespace nsop

#endif  // NSOP_MODEL_HPP_
