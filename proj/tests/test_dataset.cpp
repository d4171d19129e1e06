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

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "moodkit/error.hpp"
#include "moodkit/regression.hpp"

namespace moodkit {
namespace {

Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected an error";
  return Error(ErrorCode::kIo, "none");
}

TEST(Builtin, ShapeAndRows) {
  const auto& t = builtin_table1();
  EXPECT_EQ(t.columns(), (std::vector<std::string>{"NOL", "NOC", "NOM", "NOA"}));
  ASSERT_EQ(t.row_count(), 33u);
  EXPECT_EQ(t.rows()[0], (std::vector<double>{15837, 65, 1446, 537}));
  EXPECT_EQ(t.rows()[15], (std::vector<double>{2129555, 5035, 7292, 2294}));
  EXPECT_EQ(t.provenance(), "paper-table-1");
}

TEST(Builtin, ColumnSumsFixedAtTranscription) {
  const auto& t = builtin_table1();
  const double expected[] = {9108751, 23520, 99514, 50310};
  for (std::size_t j = 0; j < 4; ++j) {
    double sum = 0;
    for (const auto& row : t.rows()) {
      EXPECT_EQ(row[j], std::floor(row[j]));
      EXPECT_GT(row[j], 0);
      sum += row[j];
    }
    EXPECT_EQ(sum, expected[j]) << t.columns()[j];
  }
}

TEST(Columns, LocAliasesNol) {
  const auto& t = builtin_table1();
  EXPECT_EQ(t.column_index("LOC"), 0u);
  EXPECT_EQ(t.column_index("NOL"), 0u);
  EXPECT_FALSE(t.find_column("loc").has_value());
  const auto logged = log_transform(t);
  EXPECT_EQ(logged.column_index("LOC_log10"), 0u);
  Dataset renamed({"LOC", "NOC"}, {{1, 2}});
  EXPECT_EQ(renamed.column_index("NOL"), 0u);
  EXPECT_EQ(error_of([&] { t.column_index("KLOC"); }).code(), ErrorCode::kUnknownColumn);
}

TEST(Construct, Invariants) {
  EXPECT_EQ(error_of([] { Dataset({"a", "b"}, {{1}}); }).code(), ErrorCode::kMalformedRow);
  EXPECT_EQ(error_of([] {
              Dataset({"a"}, {{std::numeric_limits<double>::infinity()}});
            }).code(),
            ErrorCode::kDomain);
  EXPECT_EQ(error_of([] { Dataset({"a", "a"}, {}); }).code(), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([] { Dataset({""}, {}); }).code(), ErrorCode::kInvalidArgument);
}

TEST(ReadCsv, Examples) {
  const auto d = read_csv_text("NOL,NOC\n10,2\n");
  EXPECT_EQ(d.columns(), (std::vector<std::string>{"NOL", "NOC"}));
  ASSERT_EQ(d.row_count(), 1u);
  EXPECT_EQ(d.rows()[0], (std::vector<double>{10, 2}));

  const auto header_only = read_csv_text("NOL,NOC\n");
  EXPECT_EQ(header_only.row_count(), 0u);
  EXPECT_EQ(header_only.column_count(), 2u);
  EXPECT_EQ(error_of([&] { fit(header_only, {"NOL", {"NOC"}}); }).code(),
            ErrorCode::kInsufficientData);

  const auto e = error_of([] { read_csv_text("NOL\nabc\n"); });
  EXPECT_EQ(e.code(), ErrorCode::kNonNumeric);
  EXPECT_EQ(e.category(), ErrorCategory::kParse);
  EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
}

TEST(ReadCsv, Dialect) {
  const auto d = read_csv_text("a, b\r\n1.5, -2e3\r\n\n\n");
  EXPECT_EQ(d.columns(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.rows()[0], (std::vector<double>{1.5, -2000}));
  EXPECT_EQ(read_csv_text("x\n7").rows()[0][0], 7);
}

TEST(ReadCsv, Errors) {
  struct Case {
    const char* text;
    ErrorCode code;
    const char* fragment;
  };
  const Case cases[] = {
      {"", ErrorCode::kMalformedRow, "line 1"},
      {"a,b\n1,2\n3\n", ErrorCode::kMalformedRow, "line 3: expected 2 fields, found 1"},
      {"a,b\n1,2,3\n", ErrorCode::kMalformedRow, "found 3"},
      {"a,,b\n", ErrorCode::kMalformedRow, "line 1"},
      {"a,a\n1,2\n", ErrorCode::kMalformedRow, "duplicate"},
      {"a,b\n1,\n", ErrorCode::kNonNumeric, "column 2"},
      {"a\n1x\n", ErrorCode::kNonNumeric, "line 2"},
      {"a\nnan\n", ErrorCode::kNonNumeric, "line 2"},
      {"a\ninf\n", ErrorCode::kNonNumeric, "line 2"},
      {"a\n1\n\n2\n", ErrorCode::kNonNumeric, "line 3"},
  };
  for (const auto& c : cases) {
    const auto e = error_of([&] { read_csv_text(c.text); });
    EXPECT_EQ(e.code(), c.code) << c.text;
    EXPECT_NE(std::string(e.what()).find(c.fragment), std::string::npos)
        << c.text << " -> " << e.what();
  }
}

TEST(WriteCsv, Examples) {
  const auto text = write_csv_text(builtin_table1());
  EXPECT_EQ(text.rfind("NOL,NOC,NOM,NOA\n15837,65,1446,537\n", 0), 0u);
  EXPECT_EQ(text.find('.'), std::string::npos);
  EXPECT_EQ(read_csv_text(text).rows(), builtin_table1().rows());
  EXPECT_EQ(write_csv_text(builtin_table1()), text);
  EXPECT_EQ(write_csv_text(Dataset({"a", "b"}, {})), "a,b\n");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(2.5), "2.5");
  EXPECT_EQ(format_number(1e20), "1e+20");
  EXPECT_EQ(format_number(123456789), "123456789");
}

TEST(WriteCsv, RandomRoundTrip) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> shape(0, 6), kind(0, 3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (int trial = 0; trial < 300; ++trial) {
    const int cols = shape(rng) + 1, nrows = shape(rng);
    std::vector<std::string> names;
    for (int j = 0; j < cols; ++j) names.push_back("c" + std::to_string(j));
    std::vector<std::vector<double>> rows;
    for (int r = 0; r < nrows; ++r) {
      std::vector<double> row;
      for (int j = 0; j < cols; ++j) {
        double v = 0;
        switch (kind(rng)) {
          case 0: v = std::round(u(rng)); break;
          case 1: v = u(rng); break;
          case 2: v = u(rng) * 1e-300; break;
          default: {
            do {
              const auto b = bits(rng);
              std::memcpy(&v, &b, sizeof v);
            } while (!std::isfinite(v));
          }
        }
        row.push_back(v);
      }
      rows.push_back(row);
    }
    const Dataset d(names, rows);
    const auto back = read_csv_text(write_csv_text(d));
    ASSERT_EQ(back.columns(), d.columns());
    ASSERT_EQ(back.rows(), d.rows());
  }
}

TEST(Load, Sources) {
  EXPECT_EQ(load_dataset("builtin:table1").row_count(), 33u);
  const auto e = error_of([] { load_dataset("/nonexistent/file.csv"); });
  EXPECT_EQ(e.code(), ErrorCode::kIo);
  EXPECT_EQ(e.category(), ErrorCategory::kIo);
}

TEST(Scatter, LinearFigureContent) {
  const std::vector<std::string> ys = {"NOC", "NOM", "NOA"};
  const auto series = scatter(builtin_table1(), "LOC", ys, false);
  ASSERT_EQ(series.size(), 3u);
  for (std::size_t s = 0; s < 3; ++s) {
    EXPECT_EQ(series[s].x_name, "NOL");
    EXPECT_EQ(series[s].y_name, ys[s]);
    ASSERT_EQ(series[s].points.size(), 33u);
    for (std::size_t r = 0; r < 33; ++r) {
      EXPECT_EQ(series[s].points[r].first, builtin_table1().rows()[r][0]);
      EXPECT_EQ(series[s].points[r].second, builtin_table1().rows()[r][s + 1]);
    }
  }
}

TEST(Scatter, Log10) {
  const std::vector<std::string> ys = {"NOC"};
  const auto s = scatter(builtin_table1(), "NOL", ys, true).front();
  EXPECT_TRUE(s.log10);
  EXPECT_NEAR(s.points[0].first, 4.19967, 5e-6);
  EXPECT_NEAR(s.points[0].second, 1.81291, 5e-6);
  for (std::size_t r = 0; r < 33; ++r) {
    const auto& row = builtin_table1().rows()[r];
    EXPECT_NEAR(s.points[r].first, std::log(row[0]) / std::log(10.0), 1e-12);
    EXPECT_NEAR(s.points[r].second, std::log(row[1]) / std::log(10.0), 1e-12);
  }
}

TEST(Scatter, LogOfLoggedEqualsDoubleTransform) {
  Dataset d({"x", "y"}, {{15, 200}, {3, 11}, {1000, 2}});
  const std::vector<std::string> ys = {"y_log10"};
  const auto s = scatter(log_transform(d), "x_log10", ys, true).front();
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_DOUBLE_EQ(s.points[r].first, std::log10(std::log10(d.rows()[r][0])));
    EXPECT_DOUBLE_EQ(s.points[r].second, std::log10(std::log10(d.rows()[r][1])));
  }
}

TEST(Scatter, ErrorsAndEdges) {
  Dataset one({"x", "y"}, {{2, 3}});
  const std::vector<std::string> y = {"y"};
  EXPECT_EQ(scatter(one, "x", y, false).front().points.size(), 1u);
  const std::vector<std::string> missing = {"z"};
  EXPECT_EQ(error_of([&] { scatter(one, "x", missing, false); }).code(),
            ErrorCode::kUnknownColumn);
  Dataset zero({"x", "y"}, {{2, 3}, {0, 1}});
  const auto e = error_of([&] { scatter(zero, "x", y, true); });
  EXPECT_EQ(e.code(), ErrorCode::kNonpositiveValue);
  EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  EXPECT_NO_THROW(scatter(zero, "x", y, false));
}

TEST(Scatter, CsvAndSvg) {
  Dataset d({"NOL", "NOC"}, {{100, 10}, {1000, 100}});
  const std::vector<std::string> y = {"NOC"};
  const auto s = scatter(d, "NOL", y, true).front();
  EXPECT_EQ(scatter_csv(s), "NOL,NOC\n2,1\n3,2\n");
  const auto svg = scatter_svg(s);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("viewBox=\"0 0 640 480\""), std::string::npos);
  std::size_t circles = 0;
  for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) {
    ++circles;
  }
  EXPECT_EQ(circles, 2u);
  EXPECT_NE(svg.find("r=\"3\""), std::string::npos);
  EXPECT_NE(svg.find("log10(NOL)"), std::string::npos);
  EXPECT_NE(svg.find("log10(NOC)"), std::string::npos);
}

}  // namespace
}  // namespace moodkit
