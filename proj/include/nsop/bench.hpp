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

// Batch benchmark harness: runs the search over catalogued OR-Library
// instances and reports per-instance rows plus average percentage deviation
// from the optimal/best-known values and average time.

#ifndef NSOP_BENCH_HPP_
#define NSOP_BENCH_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsop/ingest.hpp"
#include "nsop/model.hpp"
#include "nsop/search.hpp"
#include "nsop/solver.hpp"

namespace nsop {

struct BenchRow {
  std::string instance;
  Cost obks = 0;
  Cost found_cost = 0;
  bool matched = false;
  int final_k = 0;
  int iterations = 0;
  Seconds total_time{0};
  bool guarantee = false;
  // Non-empty when the instance could not be loaded or solved; such rows are
  // excluded from the aggregates.
  std::string error;

  bool ok() const { return error.empty(); }
  double pct_deviation() const;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double average_pct_deviation = 0.0;
  Seconds average_time{0};
  int k_init = 5;
  int delta = 5;
  int l_limit = 5;
  // Unset: 15 s for m <= 500 and 45 s above.
  std::optional<Seconds> nsop_time_limit;
  std::string date;
  std::string machine;
};

struct SuiteOptions {
  int k_init = 5;
  int delta = 5;
  int l_limit = 5;
  std::optional<Seconds> nsop_time_limit;
  SolverConfig solver;
  // fnmatch(3) pattern over instance names or file stems; empty = all.
  std::string selection;
  int parallel = 1;
  // Per-iteration progress on standard error.
  bool verbose = false;
};

// 100 * (found - obks) / obks. Throws ContractViolation if obks <= 0.
double pct_deviation(Cost found, Cost obks);

// Fills average_pct_deviation and average_time from the successful rows.
void summarize(BenchReport& report);

// Catalog entries matching the selection, in natural name order.
std::vector<std::string> select_instances(const BestKnownCatalog& catalog,
                                          std::string_view selection);

// Looks for <name>, <name>.txt, <stem>, <stem>.txt in `dir`.
std::optional<std::filesystem::path> find_instance_file(
    const std::filesystem::path& dir, std::string_view instance_name);

// Throws std::invalid_argument if the directory is missing or the selection
// matches nothing. Missing or malformed files produce error rows; the suite
// continues.
BenchReport run_suite(const std::filesystem::path& instance_dir,
                      const BestKnownCatalog& catalog,
                      const SuiteOptions& options);

enum class ReportFormat { kTable, kCsv, kJson };

std::optional<ReportFormat> parse_report_format(std::string_view text);

// Table mirrors the published results layout (Instance, Optimal/best-known,
// Solution, Final K, Time, Guarantee) with "o" for a matched value and
// yes/no guarantees; csv and json carry every field at full precision.
// Throws std::runtime_error if the stream fails.
void emit_report(const BenchReport& report, ReportFormat format,
                 std::ostream& sink);

std::vector<BenchRow> parse_report_csv(std::istream& in);
BenchReport parse_report_json(std::istream& in);

}  // namespace nsop

#endif  // NSOP_BENCH_HPP_
