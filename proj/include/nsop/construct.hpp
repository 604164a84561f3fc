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

// Initial feasible solution: ratio greedy followed by removal of redundant
// columns.

#ifndef NSOP_CONSTRUCT_HPP_
#define NSOP_CONSTRUCT_HPP_

#include "nsop/model.hpp"

namespace nsop {

// Repeatedly picks the column minimising
//   cost / (number of still-uncovered rows it covers)
// until every row is covered. Ratios are compared exactly by
// cross-multiplication. Ties prefer the column covering more uncovered rows,
// then the lower index.
Solution greedy_construct(const Instance& instance);

enum class RemovalOrder {
  // Decreasing cost, then fewer covered rows, then decreasing index.
  kCostThenCoverage,
  // Decreasing cost, then decreasing index.
  kCostThenIndex,
};

// Drops redundant columns (every row they cover stays covered without them)
// one at a time in `order`, committing each removal immediately. The result
// is 1-minimal. Throws ContractViolation if `solution` is not a cover.
Solution remove_redundant(const Instance& instance, const Solution& solution,
                          RemovalOrder order = RemovalOrder::kCostThenCoverage);

}  // namespace nsop

#endif  // NSOP_CONSTRUCT_HPP_
