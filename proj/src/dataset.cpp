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

#include "moodkit/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "moodkit/error.hpp"

namespace moodkit {

namespace {

constexpr std::string_view kLogSuffix = "_log10";

// "LOC" <-> "NOL", preserving a "_log10" suffix. Empty when no alias exists.
std::string alias_of(std::string_view name) {
  std::string_view suffix;
  if (name.ends_with(kLogSuffix)) {
    suffix = kLogSuffix;
    name.remove_suffix(kLogSuffix.size());
  }
  if (name == "LOC") return "NOL" + std::string(suffix);
  if (name == "NOL") return "LOC" + std::string(suffix);
  return {};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Dataset::Dataset(std::vector<std::string> columns,
                 std::vector<std::vector<double>> rows, std::string provenance)
    : columns_(std::move(columns)),
      rows_(std::move(rows)),
      provenance_(std::move(provenance)) {
  std::set<std::string> seen;
  for (const auto& c : columns_) {
    if (c.empty()) throw Error(ErrorCode::kInvalidArgument, "empty column name");
    if (!seen.insert(c).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate column '" + c + "'");
    }
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != columns_.size()) {
      throw Error(ErrorCode::kMalformedRow,
                  "row " + std::to_string(r + 1) + " has " +
                      std::to_string(rows_[r].size()) + " values, expected " +
                      std::to_string(columns_.size()));
    }
    for (double v : rows_[r]) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kDomain,
                    "row " + std::to_string(r + 1) + " has a non-finite value");
      }
    }
  }
}

std::optional<std::size_t> Dataset::find_column(std::string_view name) const {
  auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) {
    const auto alias = alias_of(name);
    if (alias.empty()) return std::nullopt;
    it = std::find(columns_.begin(), columns_.end(), alias);
    if (it == columns_.end()) return std::nullopt;
  }
  return static_cast<std::size_t>(it - columns_.begin());
}

std::size_t Dataset::column_index(std::string_view name) const {
  if (auto i = find_column(name)) return *i;
  throw Error(ErrorCode::kUnknownColumn,
              "unknown column '" + std::string(name) + "'");
}

std::vector<double> Dataset::column(std::string_view name) const {
  const auto j = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row[j]);
  return out;
}

const Dataset& builtin_table1() {
  static const Dataset table(
      {"NOL", "NOC", "NOM", "NOA"},
      {
          {15837, 65, 1446, 537},        {23570, 57, 1535, 876},
          {47106, 91, 2141, 1178},       {23154, 51, 1420, 538},
          {20747, 154, 2814, 1113},      {44930, 92, 2224, 1132},
          {28582, 71, 1978, 839},        {19254, 69, 1815, 675},
          {20085, 74, 1876, 700},        {57086, 140, 322, 81},
          {92231, 201, 481, 124},        {167541, 355, 735, 204},
          {261260, 562, 1193, 297},      {838128, 1966, 3227, 611},
          {2062982, 5107, 6735, 2297},   {2129555, 5035, 7292, 2294},
          {1948354, 4566, 5975, 2095},   {64492, 222, 210, 81},
          {70514, 243, 229, 88},         {113919, 349, 325, 132},
          {177356, 565, 516, 185},       {6593, 324, 1310, 60},
          {1023, 25, 103, 220},          {1729, 20, 134, 185},
          {50000, 46, 2025, 510},        {300000, 1000, 11000, 10960},
          {500000, 1617, 37191, 17141},  {9189, 339, 1993, 4022},
          {7102, 45, 711, 482},          {830, 10, 175, 89},
          {1602, 26, 180, 247},          {3451, 18, 170, 145},
          {549, 15, 33, 172},
      },
      std::string(kBuiltinTable1Provenance));
  return table;
}

Dataset read_csv(std::istream& in, std::string provenance) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) {
    throw Error(ErrorCode::kMalformedRow, "line 1: missing header");
  }

  std::vector<std::string> columns;
  for (auto f : split(lines.front())) {
    if (f.empty()) {
      throw Error(ErrorCode::kMalformedRow, "line 1: empty column name");
    }
    columns.emplace_back(f);
  }

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split(lines[i]);
    if (fields.size() != columns.size()) {
      throw Error(ErrorCode::kMalformedRow,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(columns.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) {
      const auto f = fields[j];
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() ||
          !std::isfinite(v)) {
        throw Error(ErrorCode::kNonNumeric,
                    "line " + std::to_string(line_no) + ", column " +
                        std::to_string(j + 1) + " (" + columns[j] +
                        "): not a finite number: '" + std::string(f) + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  try {
    return Dataset(std::move(columns), std::move(rows), std::move(provenance));
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedRow, std::string("line 1: ") + e.what());
  }
}

Dataset read_csv_text(std::string_view text, std::string provenance) {
  std::istringstream in{std::string(text)};
  return read_csv(in, std::move(provenance));
}

std::string format_number(double value) {
  char buf[64];
  std::to_chars_result res{};
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  if (value == std::trunc(value) && std::fabs(value) < 9007199254740992.0) {
    res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  } else {
    res = std::to_chars(buf, buf + sizeof buf, value);
  }
  return std::string(buf, res.ptr);
}

void write_csv(const Dataset& data, std::ostream& out) {
  for (std::size_t j = 0; j < data.column_count(); ++j) {
    if (j > 0) out << ',';
    out << data.columns()[j];
  }
  out << '\n';
  for (const auto& row : data.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ',';
      out << format_number(row[j]);
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing CSV output");
}

std::string write_csv_text(const Dataset& data) {
  std::ostringstream out;
  write_csv(data, out);
  return out.str();
}

Dataset load_dataset(std::string_view source) {
  if (source == kBuiltinTable1Source) return builtin_table1();
  std::ifstream in{std::string(source)};
  if (!in) {
    throw Error(ErrorCode::kIo,
                "cannot open dataset '" + std::string(source) + "'");
  }
  return read_csv(in, std::string(source));
}

std::vector<ScatterSeries> scatter(const Dataset& data, std::string_view x,
                                   std::span<const std::string> ys,
                                   bool log10) {
  const auto xi = data.column_index(x);
  std::vector<std::size_t> yis;
  for (const auto& y : ys) yis.push_back(data.column_index(y));

  auto transform = [&](std::size_t row, std::size_t col) {
    const double v = data.rows()[row][col];
    if (!log10) return v;
    if (!(v > 0.0)) {
      throw Error(ErrorCode::kNonpositiveValue,
                  "row " + std::to_string(row + 1) + ", column " +
                      data.columns()[col] + ": log10 of nonpositive value " +
                      format_number(v));
    }
    return std::log10(v);
  };

  std::vector<ScatterSeries> out;
  for (auto yi : yis) {
    ScatterSeries s;
    s.x_name = data.columns()[xi];
    s.y_name = data.columns()[yi];
    s.log10 = log10;
    s.points.reserve(data.row_count());
    for (std::size_t r = 0; r < data.row_count(); ++r) {
      s.points.emplace_back(transform(r, xi), transform(r, yi));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string scatter_csv(const ScatterSeries& series) {
  std::string out = series.x_name + "," + series.y_name + "\n";
  for (const auto& [x, y] : series.points) {
    out += format_number(x);
    out += ',';
    out += format_number(y);
    out += '\n';
  }
  return out;
}

std::string scatter_svg(const ScatterSeries& series) {
  constexpr double kWidth = 640, kHeight = 480;
  constexpr double kLeft = 80, kRight = 20, kTop = 20, kBottom = 60;
  constexpr int kTicks = 5;

  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  if (!series.points.empty()) {
    x_min = x_max = series.points.front().first;
    y_min = y_max = series.points.front().second;
    for (const auto& [x, y] : series.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max == x_min) { x_min -= 0.5; x_max += 0.5; }
  if (y_max == y_min) { y_min -= 0.5; y_max += 0.5; }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

  auto label = [&](const std::string& name) {
    return xml_escape(series.log10 ? "log10(" + name + ")" : name);
  };

  std::ostringstream svg;
  char buf[160];
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  svg << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n",
                kLeft, kTop + plot_h, kLeft + plot_w, kTop + plot_h);
  svg << buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n",
                kLeft, kTop, kLeft, kTop + plot_h);
  svg << buf;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = x_min + (x_max - x_min) * i / kTicks;
    const double fy = y_min + (y_max - y_min) * i / kTicks;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" font-size=\"10\" "
                  "text-anchor=\"middle\">%.4g</text>\n",
                  sx(fx), kTop + plot_h + 15, fx);
    svg << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" font-size=\"10\" "
                  "text-anchor=\"end\">%.4g</text>\n",
                  kLeft - 5, sy(fy) + 3, fy);
    svg << buf;
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" font-size=\"12\" text-anchor=\"middle\">" << label(series.x_name)
      << "</text>\n";
  svg << "<text x=\"15\" y=\"" << kTop + plot_h / 2
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
      << kTop + plot_h / 2 << ")\">" << label(series.y_name) << "</text>\n";
  for (const auto& [x, y] : series.points) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"steelblue\"/>\n",
                  sx(x), sy(y));
    svg << buf;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace moodkit
