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

#include "nsop/ingest.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <utility>

#include "nsop/errors.hpp"

namespace nsop {

extern const char kBundledBestKnown[];

namespace {

// Whitespace tokenizer over an in-memory buffer that remembers where each
// token started, for error reporting.
class IntegerReader {
 public:
  explicit IntegerReader(std::string_view text) : text_(text) {}

  std::int64_t Next(const char* what) {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    start_ = pos_;
    current_ = count_;
    if (pos_ >= text_.size()) {
      Fail(std::string("truncated input: expected ") + what);
    }
    while (pos_ < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::string_view token = text_.substr(start_, pos_ - start_);
    std::int64_t value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
      Fail("token '" + std::string(token) + "' is not an integer (" + what +
           ")");
    }
    ++count_;
    return value;
  }

  bool AtEnd() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    start_ = pos_;
    current_ = count_;
    return pos_ >= text_.size();
  }

  [[noreturn]] void Fail(const std::string& rule) const {
    throw ParseError("byte " + std::to_string(start_) + ", token " +
                         std::to_string(current_) + ": " + rule,
                     start_, current_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  // Ordinal of the token being read or last read, and tokens consumed.
  std::size_t current_ = 0;
  std::size_t count_ = 0;
};

constexpr std::array<ProblemSet, 11> kProblemSets = {{
    {"4", 10, 200, 1000, 2},
    {"5", 10, 200, 2000, 2},
    {"6", 5, 200, 1000, 5},
    {"A", 5, 300, 3000, 2},
    {"B", 5, 300, 3000, 5},
    {"C", 5, 400, 4000, 2},
    {"D", 5, 400, 4000, 5},
    {"NRE", 5, 500, 5000, 10},
    {"NRF", 5, 500, 5000, 20},
    {"NRG", 5, 1000, 10000, 2},
    {"NRH", 5, 1000, 10000, 5},
}};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(c));
  return out;
}

}  // namespace

Instance parse_orlib_scp(std::string_view text, std::string name) {
  IntegerReader reader(text);
  const std::int64_t m = reader.Next("number of rows");
  if (m <= 0) reader.Fail("number of rows must be positive");
  const std::int64_t n = reader.Next("number of columns");
  if (n <= 0) reader.Fail("number of columns must be positive");
  if (n > std::numeric_limits<Column>::max()) {
    reader.Fail("number of columns too large");
  }

  std::vector<Cost> costs(static_cast<std::size_t>(n));
  for (auto& c : costs) {
    c = reader.Next("column cost");
    if (c < 0) reader.Fail("column cost must be non-negative");
  }

  std::vector<std::vector<Column>> rows(static_cast<std::size_t>(m));
  for (auto& row : rows) {
    const std::int64_t k = reader.Next("row length");
    if (k <= 0) reader.Fail("row length must be positive");
    if (k > n) reader.Fail("row length exceeds number of columns");
    row.reserve(static_cast<std::size_t>(k));
    for (std::int64_t t = 0; t < k; ++t) {
      const std::int64_t j = reader.Next("column index");
      if (j < 1 || j > n) {
        reader.Fail("column index " + std::to_string(j) + " outside [1, " +
                    std::to_string(n) + "]");
      }
      row.push_back(static_cast<Column>(j - 1));
    }
  }
  if (!reader.AtEnd()) reader.Fail("unexpected trailing data");
  return Instance::Create(std::move(name), std::move(costs), std::move(rows));
}

Instance parse_orlib_scp(std::istream& in, std::string name) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  return parse_orlib_scp(std::string_view(text), std::move(name));
}

Instance load_orlib_scp_file(const std::filesystem::path& path,
                             std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open instance file " + path.string());
  }
  if (name.empty()) name = path.stem().string();
  return parse_orlib_scp(in, std::move(name));
}

void write_orlib_scp(const Instance& instance, std::ostream& out) {
  for (int i = 0; i < instance.num_rows(); ++i) {
    if (instance.rhs(i) != 1) {
      throw ContractViolation("OR-Library layout requires unit right-hand sides");
    }
  }
  out << ' ' << instance.num_rows() << ' ' << instance.num_cols() << '\n';
  auto write_wrapped = [&out](auto begin, auto end, auto value_of) {
    int on_line = 0;
    for (auto it = begin; it != end; ++it) {
      out << ' ' << value_of(*it);
      if (++on_line == 12) {
        out << '\n';
        on_line = 0;
      }
    }
    if (on_line != 0) out << '\n';
  };
  const auto costs = instance.costs();
  write_wrapped(costs.begin(), costs.end(), [](Cost c) { return c; });
  for (const auto& row : instance.rows()) {
    out << ' ' << row.size() << '\n';
    write_wrapped(row.begin(), row.end(), [](Column j) { return j + 1; });
  }
}

std::string orlib_file_stem(std::string_view instance_name) {
  std::string stem = "scp";
  for (const char c : instance_name) {
    if (c != '.') stem += static_cast<char>(std::tolower(c));
  }
  return stem;
}

std::string instance_name_from_stem(std::string_view file_stem) {
  std::string_view s = file_stem;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    s = s.substr(0, dot);
  }
  const std::string lower = Lower(s);
  if (lower.rfind("scp", 0) != 0 || lower.size() < 4) return std::string(s);
  const std::string body = lower.substr(3);
  if (std::isdigit(static_cast<unsigned char>(body[0]))) {
    // scp41 -> 4.1, scp410 -> 4.10
    return body.substr(0, 1) + "." + body.substr(1);
  }
  return Upper(body);
}

void BestKnownCatalog::Add(std::string name, Cost value) {
  if (Lower(name).rfind("scp", 0) == 0) name = instance_name_from_stem(name);
  if (value <= 0) {
    throw ContractViolation("best-known value for " + name +
                            " must be positive");
  }
  const std::string stem = orlib_file_stem(name);
  if (entries_.count(name) != 0 || aliases_.count(stem) != 0) {
    throw ContractViolation("duplicate catalog entry " + name);
  }
  aliases_.emplace(stem, name);
  entries_.emplace(std::move(name), value);
}

std::optional<Cost> BestKnownCatalog::Find(std::string_view name) const {
  if (auto it = entries_.find(std::string(name)); it != entries_.end()) {
    return it->second;
  }
  if (auto a = aliases_.find(Lower(name)); a != aliases_.end()) {
    return entries_.at(a->second);
  }
  return std::nullopt;
}

BestKnownCatalog load_best_known(std::istream& in) {
  BestKnownCatalog catalog;
  std::string line;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    std::string value_text;
    std::string extra;
    if (!(fields >> value_text) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected 'name value'",
                       line_start, line_no - 1);
    }
    Cost value = 0;
    const auto [end, ec] = std::from_chars(
        value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc() || end != value_text.data() + value_text.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": value '" +
                           value_text + "' is not an integer",
                       line_start, line_no - 1);
    }
    try {
      catalog.Add(name, value);
    } catch (const ContractViolation& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       line_start, line_no - 1);
    }
  }
  return catalog;
}

BestKnownCatalog load_best_known_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path.string());
  return load_best_known(in);
}

std::string_view bundled_best_known_text() { return kBundledBestKnown; }

const BestKnownCatalog& bundled_best_known() {
  static const BestKnownCatalog catalog = [] {
    std::istringstream in{std::string(kBundledBestKnown)};
    return load_best_known(in);
  }();
  return catalog;
}

InstanceStats instance_stats(const Instance& instance) {
  return InstanceStats{instance.name(), instance.num_rows(),
                       instance.num_cols(), density(instance)};
}

std::span<const ProblemSet> benchmark_problem_sets() { return kProblemSets; }

std::string problem_set_of(std::string_view instance_name) {
  if (const auto dot = instance_name.find('.');
      dot != std::string_view::npos) {
    return std::string(instance_name.substr(0, dot));
  }
  std::size_t end = 0;
  while (end < instance_name.size() &&
         std::isalpha(static_cast<unsigned char>(instance_name[end]))) {
    ++end;
  }
  return Upper(instance_name.substr(0, end));
}

std::vector<std::string> benchmark_instance_names() {
  std::vector<std::string> names;
  for (const ProblemSet& set : kProblemSets) {
    const bool numeric = std::isdigit(static_cast<unsigned char>(set.name[0]));
    for (int i = 1; i <= set.count; ++i) {
      names.push_back(std::string(set.name) + (numeric ? "." : "") +
                      std::to_string(i));
    }
  }
  return names;
}

}  // namespace nsop
