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

#include "nsop/search.hpp"

#include <chrono>
#include <stdexcept>

#include "nsop/construct.hpp"
#include "nsop/errors.hpp"
#include "nsop/nsop.hpp"

namespace nsop {

Seconds nsop_time_limit_for(const Instance& instance) {
  return Seconds(instance.num_rows() > 500 ? 45.0 : 15.0);
}

SearchParams default_search_params(const Instance& instance) {
  SearchParams params;
  params.nsop_time_limit = nsop_time_limit_for(instance);
  return params;
}

SearchResult run_search(const Instance& instance, const SearchParams& params,
                        const SolverConfig& solver_config,
                        const IterationCallback& on_iteration) {
  params.Validate();
  SolverConfig config = solver_config;
  config.time_limit = params.nsop_time_limit;
  config.Validate();

  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  Solution incumbent = remove_redundant(instance, greedy_construct(instance));
  result.initial_solution = incumbent;

  int k = params.k_init;
  int non_improving = 0;
  for (int t = 1;; ++t) {
    const NsopModel model = build_nsop(instance, incumbent, k);
    const SolveOutcome outcome = solve(model, config);

    IterationRecord record;
    record.t = t;
    record.k = k;
    record.status = outcome.status;
    record.elapsed = outcome.elapsed;
    record.nodes = outcome.nodes_explored;
    if (outcome.best) {
      if (!is_nsop_feasible(model, outcome.best->selected())) {
        throw std::logic_error("solver returned a point outside the NSOP");
      }
      incumbent = *outcome.best;
      record.improved = true;
      non_improving = 0;
    } else {
      ++non_improving;
    }
    record.incumbent_cost_after = incumbent.cost();
    result.trace.push_back(record);
    if (on_iteration) on_iteration(record);

    if (non_improving >= params.l_limit) break;
    k += params.delta;
  }

  result.final_solution = std::move(incumbent);
  result.final_k = k;
  result.guarantee =
      result.trace.back().status == SolveStatus::kProvenInfeasible;
  result.total_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace nsop
