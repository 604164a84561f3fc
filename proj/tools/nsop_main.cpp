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

// Command-line front end over the C interface.
//
//   nsop solve <instance-file> [options]
//   nsop bench <instance-dir> [--catalog FILE] [--select GLOB] [options]
//
// Exit codes: 0 success, 2 bad configuration, 3 input could not be read,
// 4 internal failure.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "nsop/c_api.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

int ExitCodeFor(nsop_status status) {
  switch (status) {
    case NSOP_OK:
      return 0;
    case NSOP_ERR_INVALID_ARGUMENT:
    case NSOP_ERR_CONTRACT:
      return kExitConfig;
    case NSOP_ERR_PARSE:
    case NSOP_ERR_IO:
      return kExitInput;
    case NSOP_ERR_INTERNAL:
      break;
  }
  return kExitInternal;
}

int Report(nsop_status status, const char* what) {
  std::fprintf(stderr, "nsop: %s: %s\n", what, nsop_last_error());
  return ExitCodeFor(status);
}

struct CommonFlags {
  nsop_search_params params{};
  std::string format = "table";
  std::string out;
};

void AddSearchFlags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--k-init", f.params.k_init, "Initial neighbourhood size K")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--delta", f.params.delta, "K increment per iteration")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--l-limit", f.params.l_limit,
                  "Stop after this many consecutive non-improving iterations")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--nsop-time-limit", f.params.nsop_time_limit_s,
                  "Seconds per subproblem (default 15, or 45 when m > 500)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--node-limit", f.params.node_limit,
                  "Branch-and-bound nodes per subproblem")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--deterministic", f.params.deterministic,
                "With --node-limit, ignore the wall clock");
  cmd->add_flag("-v,--verbose", f.params.verbose, "Progress on stderr");
}

int RunSolve(const std::string& path, const CommonFlags& f) {
  nsop_instance* inst = nullptr;
  if (nsop_status s = nsop_instance_load_file(path.c_str(), nullptr, &inst)) {
    return Report(s, path.c_str());
  }
  std::printf("instance %s  m=%d  n=%d  density=%.2f%%\n",
              nsop_instance_name(inst), nsop_instance_num_rows(inst),
              nsop_instance_num_cols(inst), nsop_instance_density(inst));

  nsop_search_result* res = nullptr;
  nsop_status s = nsop_search_run(inst, &f.params, &res);
  nsop_instance_free(inst);
  if (s != NSOP_OK) return Report(s, "search");

  std::printf("initial cost %lld\n",
              static_cast<long long>(nsop_search_result_initial_cost(res)));
  std::printf("%4s %6s %-20s %12s %10s %12s\n", "t", "K", "status", "cost",
              "time_s", "nodes");
  const size_t n = nsop_search_result_num_iterations(res);
  for (size_t i = 0; i < n; ++i) {
    nsop_iteration it;
    nsop_search_result_iteration(res, i, &it);
    std::printf("%4d %6d %-20s %12lld %10.3f %12lld%s\n", it.t, it.k,
                nsop_solve_status_name(it.status),
                static_cast<long long>(it.incumbent_cost_after), it.elapsed_s,
                static_cast<long long>(it.nodes), it.improved ? "  *" : "");
  }
  std::printf("final cost %lld  final K %d  time %.3f s  guarantee %s\n",
              static_cast<long long>(nsop_search_result_cost(res)),
              nsop_search_result_final_k(res),
              nsop_search_result_total_time(res),
              nsop_search_result_guarantee(res) ? "yes" : "no");

  std::vector<int32_t> cols(nsop_search_result_columns(res, nullptr, 0));
  nsop_search_result_columns(res, cols.data(), cols.size());
  std::printf("columns");
  for (int32_t c : cols) std::printf(" %d", c + 1);
  std::printf("\n");
  nsop_search_result_free(res);
  return 0;
}

int RunBench(const std::string& dir, const std::string& catalog_path,
             const std::string& selection, int parallel, const CommonFlags& f) {
  nsop_report_format format;
  if (f.format == "table") {
    format = NSOP_FORMAT_TABLE;
  } else if (f.format == "csv") {
    format = NSOP_FORMAT_CSV;
  } else if (f.format == "json") {
    format = NSOP_FORMAT_JSON;
  } else {
    std::fprintf(stderr, "nsop: unknown format '%s'\n", f.format.c_str());
    return kExitConfig;
  }

  nsop_catalog* catalog = nullptr;
  nsop_status s = catalog_path.empty()
                      ? nsop_catalog_bundled(&catalog)
                      : nsop_catalog_load_file(catalog_path.c_str(), &catalog);
  if (s != NSOP_OK) return Report(s, "catalog");

  nsop_report* report = nullptr;
  s = nsop_bench_run(dir.c_str(), catalog, &f.params, selection.c_str(),
                     parallel, &report);
  nsop_catalog_free(catalog);
  if (s != NSOP_OK) return Report(s, "bench");

  s = nsop_report_emit(report, format, f.out.empty() ? nullptr : f.out.c_str());
  const size_t errors = nsop_report_num_errors(report);
  nsop_report_free(report);
  if (s != NSOP_OK) return Report(s, "report");
  if (errors > 0) {
    std::fprintf(stderr, "nsop: %zu instance(s) could not be run\n", errors);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighbourhood search for zero-one covering problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", nsop_version());

  CommonFlags solve_flags;
  nsop_search_params_default(&solve_flags.params);
  std::string instance_path;
  CLI::App* solve = app.add_subcommand("solve", "Run the search on one file");
  solve->add_option("instance", instance_path, "OR-Library scp file")
      ->required();
  AddSearchFlags(solve, solve_flags);

  CommonFlags bench_flags;
  nsop_search_params_default(&bench_flags.params);
  std::string dir, catalog_path, selection;
  int parallel = 1;
  CLI::App* bench =
      app.add_subcommand("bench", "Run catalogued instances from a directory");
  bench->add_option("dir", dir, "Directory with scp*.txt files")->required();
  bench->add_option("--catalog", catalog_path,
                    "Best-known values file (default: built-in table)");
  bench->add_option("--select", selection,
                    "Glob over instance names, e.g. '4.*' or 'scp5*'");
  bench->add_option("--format", bench_flags.format, "table, csv or json");
  bench->add_option("--out", bench_flags.out, "Write report to this file");
  bench->add_option("--parallel", parallel, "Instances solved concurrently")
      ->check(CLI::PositiveNumber);
  AddSearchFlags(bench, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*solve) return RunSolve(instance_path, solve_flags);
  return RunBench(dir, catalog_path, selection, parallel, bench_flags);
}
