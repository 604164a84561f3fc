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

#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace nsop::testing {

Instance RandomSmallInstance(Rng& rng, const SmallShape& shape,
                             std::string name) {
  std::uniform_int_distribution<int> ncols(shape.min_cols, shape.max_cols);
  std::uniform_int_distribution<int> nrows(shape.min_rows, shape.max_rows);
  std::uniform_int_distribution<Cost> cost(shape.min_cost, shape.max_cost);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = ncols(rng);
  const int m = nrows(rng);
  const double density = 0.1 + 0.5 * unit(rng);

  std::vector<Cost> costs(n);
  for (Cost& c : costs) c = cost(rng);
  std::vector<std::vector<Column>> rows(m);
  std::vector<int> rhs(m, 1);
  std::uniform_int_distribution<Column> any(0, n - 1);
  for (int i = 0; i < m; ++i) {
    for (Column j = 0; j < n; ++j) {
      if (unit(rng) < density) rows[i].push_back(j);
    }
    if (rows[i].empty()) rows[i].push_back(any(rng));
    if (rows[i].size() >= 2 && unit(rng) < shape.multi_cover_prob) rhs[i] = 2;
  }
  return Instance::Create(std::move(name), std::move(costs), std::move(rows),
                          std::move(rhs));
}

Instance RandomOrlibLikeInstance(Rng& rng, int rows, int cols, double density,
                               Cost max_cost, std::string name) {
  std::uniform_int_distribution<Cost> cost(1, max_cost);
  std::uniform_int_distribution<Column> any(0, cols - 1);
  std::uniform_int_distribution<int> any_row(0, rows - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Cost> costs(cols);
  for (Cost& c : costs) c = cost(rng);
  std::vector<std::vector<Column>> r(rows);
  for (auto& row : r) {
    for (Column j = 0; j < cols; ++j) {
      if (unit(rng) < density) row.push_back(j);
    }
    while (row.size() < 2) row.push_back(any(rng));
  }
  std::vector<char> used(cols, 0);
  for (const auto& row : r) {
    for (const Column j : row) used[j] = 1;
  }
  for (Column j = 0; j < cols; ++j) {
    if (!used[j]) r[any_row(rng)].push_back(j);
  }
  return Instance::Create(std::move(name), std::move(costs), std::move(r));
}

ColumnSet RandomSubset(Rng& rng, int n, double p) {
  std::bernoulli_distribution pick(p);
  ColumnSet out;
  for (Column j = 0; j < n; ++j) {
    if (pick(rng)) out.push_back(j);
  }
  return out;
}

}  // namespace nsop::testing
