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

#include "nsop/bench.hpp"

#include <fnmatch.h>
#include <sys/utsname.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "nsop/errors.hpp"

namespace nsop {

namespace {

using nlohmann::json;

// "4.10" sorts after "4.9"; digit runs compare numerically.
bool NaturalLess(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      const auto na = std::stoll(std::string(a.substr(i, ei - i)));
      const auto nb = std::stoll(std::string(b.substr(j, ej - j)));
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

std::string NowIso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string MachineDescriptor() {
  std::ostringstream os;
  utsname u{};
  if (uname(&u) == 0) {
    os << u.nodename << ' ' << u.sysname << ' ' << u.release << ' '
       << u.machine;
  }
  os << ", " << std::thread::hardware_concurrency() << " hardware threads";
  return os.str();
}

std::string Fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string Exact(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::vector<std::string> CsvSplit(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

constexpr const char* kCsvHeader =
    "instance,obks,found_cost,matched,final_k,iterations,total_time_s,"
    "guarantee,pct_deviation,error";

json RowToJson(const BenchRow& row) {
  json j = {{"instance", row.instance},
            {"obks", row.obks},
            {"found_cost", row.found_cost},
            {"matched", row.matched},
            {"final_k", row.final_k},
            {"iterations", row.iterations},
            {"total_time_s", row.total_time.count()},
            {"guarantee", row.guarantee},
            {"error", row.error}};
  j["pct_deviation"] =
      row.ok() && row.obks > 0 ? json(row.pct_deviation()) : json(nullptr);
  return j;
}

BenchRow RowFromJson(const json& j) {
  BenchRow row;
  row.instance = j.at("instance").get<std::string>();
  row.obks = j.at("obks").get<Cost>();
  row.found_cost = j.at("found_cost").get<Cost>();
  row.matched = j.at("matched").get<bool>();
  row.final_k = j.at("final_k").get<int>();
  row.iterations = j.at("iterations").get<int>();
  row.total_time = Seconds(j.at("total_time_s").get<double>());
  row.guarantee = j.at("guarantee").get<bool>();
  row.error = j.at("error").get<std::string>();
  return row;
}

BenchRow RunOne(const std::filesystem::path& dir, const std::string& name,
                Cost obks, const SuiteOptions& options,
                std::mutex& log_mutex) {
  BenchRow row;
  row.instance = name;
  row.obks = obks;
  try {
    const auto path = find_instance_file(dir, name);
    if (!path) {
      row.error = "instance file not found in " + dir.string();
      return row;
    }
    const Instance instance = load_orlib_scp_file(*path, name);
    SearchParams params;
    params.k_init = options.k_init;
    params.delta = options.delta;
    params.l_limit = options.l_limit;
    params.nsop_time_limit =
        options.nsop_time_limit.value_or(nsop_time_limit_for(instance));
    IterationCallback log;
    if (options.verbose) {
      log = [&](const IterationRecord& r) {
        std::lock_guard<std::mutex> lock(log_mutex);
        std::cerr << name << " t=" << r.t << " K=" << r.k << ' '
                  << to_string(r.status) << " cost=" << r.incumbent_cost_after
                  << " nodes=" << r.nodes << " time=" << Fixed(r.elapsed.count(), 2)
                  << "s\n";
      };
    }
    const SearchResult result =
        run_search(instance, params, options.solver, log);
    row.found_cost = result.final_solution.cost();
    row.matched = row.found_cost == obks;
    row.final_k = result.final_k;
    row.iterations = static_cast<int>(result.trace.size());
    row.total_time = result.total_time;
    row.guarantee = result.guarantee;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

double BenchRow::pct_deviation() const {
  return nsop::pct_deviation(found_cost, obks);
}

double pct_deviation(Cost found, Cost obks) {
  if (obks <= 0) throw ContractViolation("best-known value must be positive");
  return 100.0 * static_cast<double>(found - obks) / static_cast<double>(obks);
}

void summarize(BenchReport& report) {
  double dev = 0.0;
  double time = 0.0;
  int count = 0;
  for (const BenchRow& row : report.rows) {
    if (!row.ok()) continue;
    dev += row.pct_deviation();
    time += row.total_time.count();
    ++count;
  }
  report.average_pct_deviation = count > 0 ? dev / count : 0.0;
  report.average_time = Seconds(count > 0 ? time / count : 0.0);
}

std::vector<std::string> select_instances(const BestKnownCatalog& catalog,
                                          std::string_view selection) {
  std::vector<std::string> names;
  const std::string pattern(selection);
  for (const auto& [name, value] : catalog.entries()) {
    if (pattern.empty() ||
        fnmatch(pattern.c_str(), name.c_str(), 0) == 0 ||
        fnmatch(pattern.c_str(), orlib_file_stem(name).c_str(), 0) == 0) {
      names.push_back(name);
    }
  }
  std::sort(names.begin(), names.end(), NaturalLess);
  return names;
}

std::optional<std::filesystem::path> find_instance_file(
    const std::filesystem::path& dir, std::string_view instance_name) {
  const std::string name(instance_name);
  const std::string stem = orlib_file_stem(instance_name);
  for (const std::string& candidate :
       {name, name + ".txt", stem, stem + ".txt"}) {
    const auto p = dir / candidate;
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec)) return p;
  }
  return std::nullopt;
}

BenchReport run_suite(const std::filesystem::path& instance_dir,
                      const BestKnownCatalog& catalog,
                      const SuiteOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(instance_dir, ec)) {
    throw std::invalid_argument("instance directory " + instance_dir.string() +
                                " does not exist");
  }
  const std::vector<std::string> names =
      select_instances(catalog, options.selection);
  if (names.empty()) {
    throw std::invalid_argument("selection '" + options.selection +
                                "' matches no catalogued instance");
  }

  BenchReport report;
  report.k_init = options.k_init;
  report.delta = options.delta;
  report.l_limit = options.l_limit;
  report.nsop_time_limit = options.nsop_time_limit;
  report.date = NowIso8601();
  report.machine = MachineDescriptor();
  report.rows.resize(names.size());

  std::mutex log_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < names.size(); i = next++) {
      report.rows[i] = RunOne(instance_dir, names[i], *catalog.Find(names[i]),
                              options, log_mutex);
    }
  };
  const int threads =
      std::clamp(options.parallel, 1, static_cast<int>(names.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  summarize(report);
  return report;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "table") return ReportFormat::kTable;
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  return std::nullopt;
}

void emit_report(const BenchReport& report, ReportFormat format,
                 std::ostream& sink) {
  const std::string limit =
      report.nsop_time_limit ? Exact(report.nsop_time_limit->count())
                             : std::string("auto");
  switch (format) {
    case ReportFormat::kTable: {
      sink << std::left << std::setw(10) << "Instance" << std::setw(20)
           << "Optimal/best-known" << std::setw(10) << "Solution"
           << std::setw(9) << "Final K" << std::setw(13) << "Time (secs)"
           << "Solution guarantee\n";
      for (const BenchRow& row : report.rows) {
        sink << std::setw(10) << row.instance << std::setw(20) << row.obks;
        if (!row.ok()) {
          sink << "error: " << row.error << '\n';
          continue;
        }
        sink << std::setw(10)
             << (row.matched ? std::string("o") : std::to_string(row.found_cost))
             << std::setw(9) << row.final_k << std::setw(13)
             << Fixed(row.total_time.count(), 1)
             << (row.guarantee ? "yes" : "no") << '\n';
      }
      sink << "\nAverage % deviation: "
           << Fixed(report.average_pct_deviation, 2)
           << "\nAverage time (secs): " << Fixed(report.average_time.count(), 1)
           << "\nParameters: K=" << report.k_init << " delta=" << report.delta
           << " L=" << report.l_limit << " nsop_time_limit=" << limit
           << "\nRun: " << report.date << " on " << report.machine << '\n';
      break;
    }
    case ReportFormat::kCsv: {
      sink << "# date: " << report.date << "\n# machine: " << report.machine
           << "\n# k_init: " << report.k_init << "\n# delta: " << report.delta
           << "\n# l_limit: " << report.l_limit
           << "\n# nsop_time_limit_s: " << limit
           << "\n# average_pct_deviation: "
           << Exact(report.average_pct_deviation)
           << "\n# average_time_s: " << Exact(report.average_time.count())
           << '\n'
           << kCsvHeader << '\n';
      for (const BenchRow& row : report.rows) {
        sink << CsvQuote(row.instance) << ',' << row.obks << ','
             << row.found_cost << ',' << (row.matched ? 1 : 0) << ','
             << row.final_k << ',' << row.iterations << ','
             << Exact(row.total_time.count()) << ',' << (row.guarantee ? 1 : 0)
             << ','
             << (row.ok() && row.obks > 0 ? Exact(row.pct_deviation()) : "")
             << ',' << CsvQuote(row.error) << '\n';
      }
      break;
    }
    case ReportFormat::kJson: {
      json rows = json::array();
      for (const BenchRow& row : report.rows) rows.push_back(RowToJson(row));
      json j = {
          {"rows", rows},
          {"average_pct_deviation", report.average_pct_deviation},
          {"average_time_s", report.average_time.count()},
          {"parameters",
           {{"k_init", report.k_init},
            {"delta", report.delta},
            {"l_limit", report.l_limit},
            {"nsop_time_limit_s",
             report.nsop_time_limit ? json(report.nsop_time_limit->count())
                                    : json(nullptr)}}},
          {"date", report.date},
          {"machine", report.machine}};
      sink << j.dump(2) << '\n';
      break;
    }
  }
  sink.flush();
  if (!sink) throw std::runtime_error("failed to write report");
}

std::vector<BenchRow> parse_report_csv(std::istream& in) {
  std::vector<BenchRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw std::runtime_error("unexpected csv header");
      header_seen = true;
      continue;
    }
    const auto f = CsvSplit(line);
    if (f.size() != 10) throw std::runtime_error("malformed csv row: " + line);
    BenchRow row;
    row.instance = f[0];
    row.obks = std::stoll(f[1]);
    row.found_cost = std::stoll(f[2]);
    row.matched = f[3] == "1";
    row.final_k = std::stoi(f[4]);
    row.iterations = std::stoi(f[5]);
    row.total_time = Seconds(std::stod(f[6]));
    row.guarantee = f[7] == "1";
    row.error = f[9];
    rows.push_back(std::move(row));
  }
  return rows;
}

BenchReport parse_report_json(std::istream& in) {
  const json j = json::parse(in);
  BenchReport report;
  for (const json& r : j.at("rows")) report.rows.push_back(RowFromJson(r));
  report.average_pct_deviation = j.at("average_pct_deviation").get<double>();
  report.average_time = Seconds(j.at("average_time_s").get<double>());
  const json& p = j.at("parameters");
  report.k_init = p.at("k_init").get<int>();
  report.delta = p.at("delta").get<int>();
  report.l_limit = p.at("l_limit").get<int>();
  if (!p.at("nsop_time_limit_s").is_null()) {
    report.nsop_time_limit = Seconds(p.at("nsop_time_limit_s").get<double>());
  }
  report.date = j.at("date").get<std::string>();
  report.machine = j.at("machine").get<std::string>();
  return report;
}

}  // namespace nsop
