// Copyright 2026 The moodkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moodkit {

/// Rectangular table of finite reals with named columns.
///
/// Column lookup accepts "LOC" for "NOL" and vice versa (also with a
/// "_log10" suffix), since both names denote lines of code.
class Dataset {
 public:
  Dataset() = default;
  // Throws Error(kMalformedRow) on ragged rows, Error(kDomain) on non-finite
  // values and Error(kInvalidArgument) on empty or duplicate column names.
  Dataset(std::vector<std::string> columns,
          std::vector<std::vector<double>> rows, std::string provenance = {});

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept {
    return rows_;
  }
  const std::string& provenance() const noexcept { return provenance_; }

  std::size_t column_count() const noexcept { return columns_.size(); }
  std::size_t row_count() const noexcept { return rows_.size(); }

  std::optional<std::size_t> find_column(std::string_view name) const;
  // Throws Error(kUnknownColumn).
  std::size_t column_index(std::string_view name) const;
  std::vector<double> column(std::string_view name) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::string provenance_;
};

inline constexpr std::string_view kBuiltinTable1Provenance = "paper-table-1";
inline constexpr std::string_view kBuiltinTable1Source = "builtin:table1";

// Product metrics (NOL, NOC, NOM, NOA) of 33 object-oriented systems.
const Dataset& builtin_table1();

// Header line of names, then one numeric row per line. Comma separated,
// LF line endings (a trailing CR is tolerated). Throws Error(kMalformedRow)
// or Error(kNonNumeric) with the 1-based line number.
Dataset read_csv(std::istream& in, std::string provenance = "csv");
Dataset read_csv_text(std::string_view text, std::string provenance = "csv");

// Shortest decimal form that reads back to the same double; integral values
// never carry a decimal point or exponent.
void write_csv(const Dataset& data, std::ostream& out);
std::string write_csv_text(const Dataset& data);
std::string format_number(double value);

// Resolves "builtin:table1" or reads a CSV file. Throws Error(kIo) when the
// file cannot be opened.
Dataset load_dataset(std::string_view source);

struct ScatterSeries {
  std::string x_name;
  std::string y_name;
  std::vector<std::pair<double, double>> points;
  bool log10 = false;
};

// One series per y column, in row order. With log10 both coordinates are
// transformed; throws Error(kNonpositiveValue) if any involved value <= 0.
std::vector<ScatterSeries> scatter(const Dataset& data, std::string_view x,
                                   std::span<const std::string> ys,
                                   bool log10);

// "x_name,y_name" header followed by one point per line.
std::string scatter_csv(const ScatterSeries& series);

// Standalone 640x480 SVG with 3px point markers and labelled axes.
std::string scatter_svg(const ScatterSeries& series);

}  // namespace moodkit
