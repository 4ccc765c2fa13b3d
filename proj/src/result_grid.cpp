// Copyright 2026 The riswap Authors
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

#include "riswap/result_grid.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "riswap/errors.hpp"

namespace riswap {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, std::size_t line_no) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size()) {
    throw ValidationError("result grid line " + std::to_string(line_no) + ": malformed number '" + t + "'");
  }
  return v;
}

bool is_fidelity_column(const std::string& name) {
  return name.rfind("fidelity", 0) == 0 || name.rfind("infidelity", 0) == 0;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void ResultGrid::set_meta(const std::string& key, const std::string& value) {
  for (auto& kv : metadata) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  metadata.emplace_back(key, value);
}

std::optional<std::string> ResultGrid::meta(const std::string& key) const {
  for (const auto& kv : metadata) {
    if (kv.first == key) return kv.second;
  }
  return std::nullopt;
}

std::size_t ResultGrid::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw ValidationError("result grid has no column '" + name + "'");
}

std::vector<double> ResultGrid::column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

std::vector<std::string> ResultGrid::value_columns() const {
  return {columns.begin() + static_cast<std::ptrdiff_t>(std::min(axis_count, columns.size())), columns.end()};
}

void ResultGrid::validate() const {
  if (columns.empty()) throw ValidationError("result grid has no columns");
  if (axis_count > columns.size()) throw ValidationError("result grid axis count exceeds column count");
  for (const auto& r : rows) {
    if (r.size() != columns.size()) throw ValidationError("result grid row width does not match header");
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (is_fidelity_column(columns[c]) && std::isfinite(r[c]) && (r[c] < 0.0 || r[c] > 1.0)) {
        throw ValidationError("result grid column '" + columns[c] + "' leaves [0, 1]");
      }
    }
  }
}

void ResultGrid::write_csv(std::ostream& out) const {
  validate();
  for (const auto& [k, v] : metadata) {
    if (k != "axes") out << "# " << k << '=' << v << '\n';
  }
  out << "# axes=" << axis_count << '\n';
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << format_number(r[c]);
    out << '\n';
  }
}

ResultGrid ResultGrid::read_csv(std::istream& in) {
  ResultGrid grid;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line[0] == '#') {
      if (header_seen) throw ValidationError("result grid line " + std::to_string(line_no) + ": metadata after header");
      const std::string body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) {
        throw ValidationError("result grid line " + std::to_string(line_no) + ": metadata without '='");
      }
      const std::string key = trim(body.substr(0, eq));
      const std::string value = trim(body.substr(eq + 1));
      if (key == "axes") {
        grid.axis_count = static_cast<std::size_t>(parse_number(value, line_no));
      } else {
        grid.set_meta(key, value);
      }
      continue;
    }
    const auto fields = split(line, ',');
    if (!header_seen) {
      for (const auto& f : fields) grid.columns.push_back(trim(f));
      header_seen = true;
      continue;
    }
    if (fields.size() != grid.columns.size()) {
      throw ValidationError("result grid line " + std::to_string(line_no) + ": expected " +
                            std::to_string(grid.columns.size()) + " fields");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_number(f, line_no));
    grid.rows.push_back(std::move(row));
  }
  if (!header_seen) throw ValidationError("result grid has no header row");
  grid.validate();
  return grid;
}

}  // namespace riswap
