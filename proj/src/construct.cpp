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

#include "nsop/construct.hpp"

#include <algorithm>
#include <numeric>

#include "nsop/errors.hpp"

namespace nsop {

Solution greedy_construct(const Instance& instance) {
  const int m = instance.num_rows();
  const int n = instance.num_cols();

  std::vector<int> deficit(instance.rhs().begin(), instance.rhs().end());
  // Number of rows with positive deficit that column j touches.
  std::vector<int> gain(n, 0);
  for (Column j = 0; j < n; ++j) {
    gain[j] = static_cast<int>(instance.column(j).size());
  }
  std::vector<std::uint8_t> chosen(n, 0);
  ColumnSet selected;
  int uncovered = m;

  while (uncovered > 0) {
    Column best = -1;
    for (Column j = 0; j < n; ++j) {
      if (chosen[j] || gain[j] == 0) continue;
      if (best < 0) {
        best = j;
        continue;
      }
      // cost_j / gain_j < cost_best / gain_best
      const Cost lhs = instance.cost(j) * gain[best];
      const Cost rhs = instance.cost(best) * gain[j];
      if (lhs < rhs || (lhs == rhs && gain[j] > gain[best])) best = j;
    }
    if (best < 0) {
      throw ContractViolation("instance has a row that cannot be covered");
    }
    chosen[best] = 1;
    selected.push_back(best);
    for (const int i : instance.column(best)) {
      if (deficit[i] == 0) continue;
      if (--deficit[i] == 0) {
        --uncovered;
        for (const Column k : instance.row(i)) --gain[k];
      }
    }
  }
  return Solution::FromColumns(instance, selected);
}

Solution remove_redundant(const Instance& instance, const Solution& solution,
                          RemovalOrder order) {
  std::vector<int> covered(instance.num_rows(), 0);
  for (const Column j : solution.selected()) {
    for (const int i : instance.column(j)) ++covered[i];
  }
  for (int i = 0; i < instance.num_rows(); ++i) {
    if (covered[i] < instance.rhs(i)) {
      throw ContractViolation("remove_redundant needs a feasible cover");
    }
  }

  std::vector<Column> scan(solution.selected().begin(),
                           solution.selected().end());
  std::sort(scan.begin(), scan.end(), [&](Column a, Column b) {
    if (instance.cost(a) != instance.cost(b)) {
      return instance.cost(a) > instance.cost(b);
    }
    if (order == RemovalOrder::kCostThenCoverage) {
      const auto ca = instance.column(a).size();
      const auto cb = instance.column(b).size();
      if (ca != cb) return ca < cb;
    }
    return a > b;
  });

  std::vector<Column> kept;
  for (const Column j : scan) {
    const auto rows = instance.column(j);
    const bool redundant = std::all_of(rows.begin(), rows.end(), [&](int i) {
      return covered[i] - 1 >= instance.rhs(i);
    });
    if (redundant) {
      for (const int i : rows) --covered[i];
    } else {
      kept.push_back(j);
    }
  }
  return Solution::FromColumns(instance, kept);
}

}  // namespace nsop
