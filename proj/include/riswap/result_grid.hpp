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

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace riswap {

/// Tabular sweep output.
///
/// CSV layout: `# key=value` metadata lines, a header row, then one row per
/// grid point with every value printed as %.12g. The first `axis_count`
/// columns are the swept axes; metadata key `axes` stores that count.
struct ResultGrid {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::size_t axis_count = 0;
  std::vector<std::vector<double>> rows;

  void set_meta(const std::string& key, const std::string& value);
  std::optional<std::string> meta(const std::string& key) const;

  std::size_t column_index(const std::string& name) const;  // ValidationError if absent
  std::vector<double> column(const std::string& name) const;
  std::vector<std::string> value_columns() const;

  /// Row widths match the header, axis_count ≤ columns, and every finite
  /// entry of a fidelity* or infidelity* column lies in [0, 1].
  void validate() const;

  void write_csv(std::ostream& out) const;
  static ResultGrid read_csv(std::istream& in);

  friend bool operator==(const ResultGrid&, const ResultGrid&) = default;
};

std::string format_number(double value);

}  // namespace riswap
