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

#include "nsop/c_api.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "nsop/bench.hpp"
#include "nsop/errors.hpp"
#include "nsop/ingest.hpp"
#include "nsop/search.hpp"

struct nsop_instance {
  nsop::Instance value;
};

struct nsop_catalog {
  nsop::BestKnownCatalog value;
};

struct nsop_search_result {
  nsop::SearchResult value;
};

struct nsop_report {
  nsop::BenchReport value;
};

namespace {

thread_local std::string g_last_error;

nsop_status Fail(nsop_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Maps the C++ exception hierarchy onto status codes.
template <typename F>
nsop_status Guard(F&& body) {
  try {
    body();
    return NSOP_OK;
  } catch (const nsop::ParseError& e) {
    return Fail(NSOP_ERR_PARSE, e.what());
  } catch (const nsop::ContractViolation& e) {
    return Fail(NSOP_ERR_CONTRACT, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(NSOP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return Fail(NSOP_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(NSOP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(NSOP_ERR_INTERNAL, e.what());
  }
}

nsop::SolverConfig ToSolverConfig(const nsop_search_params& p) {
  nsop::SolverConfig config;
  if (p.node_limit > 0) config.node_limit = p.node_limit;
  config.deterministic = p.deterministic != 0;
  return config;
}

nsop::SearchParams ToSearchParams(const nsop_search_params& p,
                                  const nsop::Instance& instance) {
  nsop::SearchParams params;
  params.k_init = p.k_init;
  params.delta = p.delta;
  params.l_limit = p.l_limit;
  params.nsop_time_limit = p.nsop_time_limit_s > 0
                               ? nsop::Seconds(p.nsop_time_limit_s)
                               : nsop::nsop_time_limit_for(instance);
  return params;
}

nsop_solve_status ToC(nsop::SolveStatus s) {
  switch (s) {
    case nsop::SolveStatus::kProvenOptimal:
      return NSOP_SOLVE_OPTIMAL;
    case nsop::SolveStatus::kProvenInfeasible:
      return NSOP_SOLVE_INFEASIBLE;
    case nsop::SolveStatus::kFeasibleTimeLimit:
      return NSOP_SOLVE_FEASIBLE_TIME_LIMIT;
    case nsop::SolveStatus::kUnknownTimeLimit:
      break;
  }
  return NSOP_SOLVE_UNKNOWN_TIME_LIMIT;
}

}  // namespace

extern "C" {

const char* nsop_last_error(void) { return g_last_error.c_str(); }

const char* nsop_version(void) { return "1.0.0"; }

void nsop_search_params_default(nsop_search_params* params) {
  if (params == nullptr) return;
  params->k_init = 5;
  params->delta = 5;
  params->l_limit = 5;
  params->nsop_time_limit_s = 0.0;
  params->node_limit = 0;
  params->deterministic = 0;
  params->verbose = 0;
}

nsop_status nsop_instance_load_file(const char* path, const char* name,
                                    nsop_instance** out) {
  if (path == nullptr || out == nullptr) {
    return Fail(NSOP_ERR_INVALID_ARGUMENT, "path and out must be non-null");
  }
  return Guard([&] {
    auto inst = std::make_unique<nsop_instance>(nsop_instance{
        nsop::load_orlib_scp_file(path, name != nullptr ? name : "")});
    *out = inst.release();
  });
}

nsop_status nsop_instance_parse(const char* text, size_t length,
                                const char* name, nsop_instance** out) {
  if (text == nullptr || out == nullptr) {
    return Fail(NSOP_ERR_INVALID_ARGUMENT, "text and out must be non-null");
  }
  return Guard([&] {
    auto inst = std::make_unique<nsop_instance>(nsop_instance{
        nsop::parse_orlib_scp(std::string_view(text, length),
                              name != nullptr ? name : "instance")});
    *out = inst.release();
  });
}

void nsop_instance_free(nsop_instance* instance) { delete instance; }

const char* nsop_instance_name(const nsop_instance* instance) {
  return instance != nullptr ? instance->value.name().c_str() : "";
}

int32_t nsop_instance_num_rows(const nsop_instance* instance) {
  return instance != nullptr ? instance->value.num_rows() : 0;
}

int32_t nsop_instance_num_cols(const nsop_instance* instance) {
  return instance != nullptr ? instance->value.num_cols() : 0;
}

double nsop_instance_density(const nsop_instance* instance) {
  return instance != nullptr ? nsop::density(instance->value) : 0.0;
}

nsop_status nsop_search_run(const nsop_instance* instance,
                            const nsop_search_params* params,
                            nsop_search_result** out) {
  if (instance == nullptr || out == nullptr) {
    return Fail(NSOP_ERR_INVALID_ARGUMENT, "instance and out must be non-null");
  }
  nsop_search_params p;
  nsop_search_params_default(&p);
  if (params != nullptr) p = *params;
  return Guard([&] {
    const nsop::Instance& inst = instance->value;
    nsop::IterationCallback log;
    if (p.verbose) {
      log = [&inst](const nsop::IterationRecord& r) {
        std::cerr << inst.name() << " t=" << r.t << " K=" << r.k << ' '
                  << nsop::to_string(r.status)
                  << " cost=" << r.incumbent_cost_after << " nodes=" << r.nodes
                  << " time=" << r.elapsed.count() << "s\n";
      };
    }
    auto result = std::make_unique<nsop_search_result>(nsop_search_result{
        nsop::run_search(inst, ToSearchParams(p, inst), ToSolverConfig(p),
                         log)});
    *out = result.release();
  });
}

void nsop_search_result_free(nsop_search_result* result) { delete result; }

int64_t nsop_search_result_initial_cost(const nsop_search_result* r) {
  return r != nullptr ? r->value.initial_solution.cost() : 0;
}

int64_t nsop_search_result_cost(const nsop_search_result* r) {
  return r != nullptr ? r->value.final_solution.cost() : 0;
}

int32_t nsop_search_result_final_k(const nsop_search_result* r) {
  return r != nullptr ? r->value.final_k : 0;
}

double nsop_search_result_total_time(const nsop_search_result* r) {
  return r != nullptr ? r->value.total_time.count() : 0.0;
}

int32_t nsop_search_result_guarantee(const nsop_search_result* r) {
  return r != nullptr && r->value.guarantee ? 1 : 0;
}

size_t nsop_search_result_num_iterations(const nsop_search_result* r) {
  return r != nullptr ? r->value.trace.size() : 0;
}

nsop_status nsop_search_result_iteration(const nsop_search_result* r,
                                         size_t index, nsop_iteration* out) {
  if (r == nullptr || out == nullptr) {
    return Fail(NSOP_ERR_INVALID_ARGUMENT, "result and out must be non-null");
  }
  if (index >= r->value.trace.size()) {
    return Fail(NSOP_ERR_INVALID_ARGUMENT, "iteration index out of range");
  }
  const nsop::IterationRecord& rec = r->value.trace[index];
  out->t = rec.t;
  out->k = rec.k;
  out->status = ToC(rec.status);
  out->incumbent_cost_after = rec.incumbent_cost_after;
  out->improved = rec.improved ? 1 : 0;
  out->elapsed_s = rec.elapsed.count();
  out->nodes = rec.nodes;
  return NSOP_OK;
}

size_t nsop_search_result_columns(const nsop_search_result* r,
                                  int32_t* columns, size_t capacity) {
  if (r == nullptr) return 0;
  const auto& sel = r->value.final_solution.selected();
  if (columns != nullptr) {
    std::copy_n(sel.begin(), std::min(capacity, sel.size()), columns);
  }
  return sel.size();
}

const char* nsop_solve_status_name(nsop_solve_status status) {
  switch (status) {
    case NSOP_SOLVE_OPTIMAL:
      return "optimal";
    case NSOP_SOLVE_INFEASIBLE:
      return "infeasible";
    case NSOP_SOLVE_FEASIBLE_TIME_LIMIT:
      return "feasible_time_limit";
    case NSOP_SOLVE_UNKNOWN_TIME_LIMIT:
      return "unknown_time_limit";
  }
  return "?";
}

nsop_status nsop_catalog_load_file(const char* path, nsop_catalog** out) {
  if (path == nullptr || out == nullptr) {
    return Fail(NSOP_ERR_INVALID_ARGUMENT, "path and out must be non-null");
  }
  return Guard([&] {
    auto cat = std::make_unique<nsop_catalog>(
        nsop_catalog{nsop::load_best_known_file(path)});
    *out = cat.release();
  });
}

nsop_status nsop_catalog_bundled(nsop_catalog** out) {
  if (out == nullptr) return Fail(NSOP_ERR_INVALID_ARGUMENT, "out is null");
  return Guard([&] {
    auto cat =
        std::make_unique<nsop_catalog>(nsop_catalog{nsop::bundled_best_known()});
    *out = cat.release();
  });
}

void nsop_catalog_free(nsop_catalog* catalog) { delete catalog; }

size_t nsop_catalog_size(const nsop_catalog* catalog) {
  return catalog != nullptr ? catalog->value.size() : 0;
}

int64_t nsop_catalog_lookup(const nsop_catalog* catalog, const char* name) {
  if (catalog == nullptr || name == nullptr) return 0;
  return catalog->value.Find(name).value_or(0);
}

nsop_status nsop_bench_run(const char* instance_dir,
                           const nsop_catalog* catalog,
                           const nsop_search_params* params,
                           const char* selection, int32_t parallel,
                           nsop_report** out) {
  if (instance_dir == nullptr || out == nullptr) {
    return Fail(NSOP_ERR_INVALID_ARGUMENT,
                "instance_dir and out must be non-null");
  }
  nsop_search_params p;
  nsop_search_params_default(&p);
  if (params != nullptr) p = *params;
  return Guard([&] {
    nsop::SuiteOptions options;
    options.k_init = p.k_init;
    options.delta = p.delta;
    options.l_limit = p.l_limit;
    if (p.nsop_time_limit_s > 0) {
      options.nsop_time_limit = nsop::Seconds(p.nsop_time_limit_s);
    }
    options.solver = ToSolverConfig(p);
    options.selection = selection != nullptr ? selection : "";
    options.parallel = std::max(1, parallel);
    options.verbose = p.verbose != 0;
    // Validate parameters up front so a bad flag is a configuration error
    // rather than 65 error rows.
    nsop::SearchParams check;
    check.k_init = options.k_init;
    check.delta = options.delta;
    check.l_limit = options.l_limit;
    check.Validate();
    const nsop::BestKnownCatalog& cat =
        catalog != nullptr ? catalog->value : nsop::bundled_best_known();
    auto report = std::make_unique<nsop_report>(
        nsop_report{nsop::run_suite(instance_dir, cat, options)});
    *out = report.release();
  });
}

void nsop_report_free(nsop_report* report) { delete report; }

size_t nsop_report_num_rows(const nsop_report* report) {
  return report != nullptr ? report->value.rows.size() : 0;
}

size_t nsop_report_num_errors(const nsop_report* report) {
  if (report == nullptr) return 0;
  return static_cast<size_t>(
      std::count_if(report->value.rows.begin(), report->value.rows.end(),
                    [](const nsop::BenchRow& r) { return !r.ok(); }));
}

double nsop_report_average_deviation(const nsop_report* report) {
  return report != nullptr ? report->value.average_pct_deviation : 0.0;
}

double nsop_report_average_time(const nsop_report* report) {
  return report != nullptr ? report->value.average_time.count() : 0.0;
}

nsop_status nsop_report_emit(const nsop_report* report,
                             nsop_report_format format, const char* path) {
  if (report == nullptr) return Fail(NSOP_ERR_INVALID_ARGUMENT, "report is null");
  nsop::ReportFormat fmt;
  switch (format) {
    case NSOP_FORMAT_TABLE:
      fmt = nsop::ReportFormat::kTable;
      break;
    case NSOP_FORMAT_CSV:
      fmt = nsop::ReportFormat::kCsv;
      break;
    case NSOP_FORMAT_JSON:
      fmt = nsop::ReportFormat::kJson;
      break;
    default:
      return Fail(NSOP_ERR_INVALID_ARGUMENT, "unknown report format");
  }
  return Guard([&] {
    if (path == nullptr) {
      nsop::emit_report(report->value, fmt, std::cout);
      return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error(std::string("cannot open ") + path);
    nsop::emit_report(report->value, fmt, file);
  });
}

}  // extern "C"
