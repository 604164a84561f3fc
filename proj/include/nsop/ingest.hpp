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

// Readers for OR-Library set covering files and the table of optimal /
// best-known objective values (OBKS) of the 65 standard non-unicost
// instances.
//
// OR-Library SCP layout: whitespace-separated integers
//
//   m n
//   c_1 ... c_n
//   for each row i: k_i j_1 ... j_{k_i}     (1-based column indices)
//
// with arbitrary line wrapping.

#ifndef NSOP_INGEST_HPP_
#define NSOP_INGEST_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "nsop/model.hpp"

namespace nsop {

// Throws ParseError naming the byte offset and the violated rule.
Instance parse_orlib_scp(std::string_view text, std::string name);
Instance parse_orlib_scp(std::istream& in, std::string name);

// Reads a file; an empty `name` defaults to the file stem ("scp41").
Instance load_orlib_scp_file(const std::filesystem::path& path,
                             std::string name = {});

// Writes `instance` in OR-Library layout, 12 integers per line. Only
// instances whose right-hand sides are all 1 are representable.
void write_orlib_scp(const Instance& instance, std::ostream& out);

// Converts between the published instance names ("4.1", "A3", "NRE1") and
// the OR-Library file stems ("scp41", "scpa3", "scpnre1").
std::string orlib_file_stem(std::string_view instance_name);
std::string instance_name_from_stem(std::string_view file_stem);

class BestKnownCatalog {
 public:
  // File-stem spellings (scp41) are stored under the published name (4.1).
  // Throws ContractViolation on a duplicate name or non-positive value.
  void Add(std::string name, Cost value);

  // Accepts either spelling ("4.1" or "scp41").
  std::optional<Cost> Find(std::string_view name) const;

  // Canonical (published) names in insertion-independent order.
  const std::map<std::string, Cost>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, Cost> entries_;
  std::map<std::string, std::string> aliases_;
};

// "name value" per line; '#' starts a comment; blank lines ignored.
// Throws ParseError on malformed lines, duplicates and non-positive values.
BestKnownCatalog load_best_known(std::istream& in);
BestKnownCatalog load_best_known_file(const std::filesystem::path& path);

// The checked-in catalog (data/best_known.txt) compiled into the library.
const BestKnownCatalog& bundled_best_known();
std::string_view bundled_best_known_text();

struct InstanceStats {
  std::string name;
  int num_rows = 0;
  int num_cols = 0;
  double density = 0.0;
};

InstanceStats instance_stats(const Instance& instance);

// One row of the benchmark characteristics table.
struct ProblemSet {
  std::string_view name;  // "4", "A", "NRE", ...
  int count;
  int num_rows;
  int num_cols;
  int density_pct;
};

std::span<const ProblemSet> benchmark_problem_sets();

// Problem set that a published instance name belongs to ("NRE3" -> "NRE").
std::string problem_set_of(std::string_view instance_name);

// All 65 published instance names, grouped by set in table order.
std::vector<std::string> benchmark_instance_names();

}  // namespace nsop

#endif  // NSOP_INGEST_HPP_
