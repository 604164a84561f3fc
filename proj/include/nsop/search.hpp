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

// Neighbourhood search driven by NSOP solves:
//
//   (a) X <- remove_redundant(greedy_construct()), K <- k_init, t <- 0
//   (b) t <- t + 1; solve NSOP(X, K); any feasible point replaces X
//   (c) stop after l_limit consecutive iterations without improvement,
//       otherwise K <- K + delta and repeat (b)
//
// K grows every iteration whether or not X improved.

#ifndef NSOP_SEARCH_HPP_
#define NSOP_SEARCH_HPP_

#include <functional>
#include <vector>

#include "nsop/model.hpp"
#include "nsop/solver.hpp"

namespace nsop {

struct IterationRecord {
  int t = 0;
  int k = 0;
  SolveStatus status = SolveStatus::kUnknownTimeLimit;
  Cost incumbent_cost_after = 0;
  bool improved = false;
  Seconds elapsed{0};
  std::int64_t nodes = 0;
};

struct SearchResult {
  Solution initial_solution;
  Solution final_solution;
  std::vector<IterationRecord> trace;
  int final_k = 0;
  Seconds total_time{0};
  // The NSOP of the last (largest K) iteration was proven infeasible: no
  // improved cover lies within Hamming distance final_k of final_solution.
  bool guarantee = false;
};

// 15 s for m <= 500, 45 s above.
Seconds nsop_time_limit_for(const Instance& instance);

// Default parameters with the m-based NSOP time limit.
SearchParams default_search_params(const Instance& instance);

using IterationCallback = std::function<void(const IterationRecord&)>;

// The per-NSOP budget comes from params.nsop_time_limit; every other solver
// setting comes from solver_config. `on_iteration` (optional) sees each
// record as soon as it is produced.
SearchResult run_search(const Instance& instance, const SearchParams& params,
                        const SolverConfig& solver_config,
                        const IterationCallback& on_iteration = {});

}  // namespace nsop

#endif  // NSOP_SEARCH_HPP_
