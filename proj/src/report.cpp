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

#include "moodkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace moodkit {

namespace {

using nlohmann::json;

json number_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json metric_json(const MetricValue& m) {
  json j;
  j["value"] = m.defined() ? json(m.value()) : json(nullptr);
  j["numerator"] = m.numerator;
  j["denominator"] = m.denominator;
  j["undefined_reason"] =
      m.undefined_reason ? json(*m.undefined_reason) : json(nullptr);
  return j;
}

json mood_json(const MoodReport& r) {
  return json{{"mhf", metric_json(r.mhf)}, {"ahf", metric_json(r.ahf)},
              {"mif", metric_json(r.mif)}, {"aif", metric_json(r.aif)},
              {"pf", metric_json(r.pf)},   {"cf", metric_json(r.cf)},
              {"tc", r.tc}};
}

json fit_json(const FitResult& f) {
  json coefficients = json::array();
  for (const auto& c : f.coefficients) {
    coefficients.push_back({{"name", c.name},
                            {"beta", number_or_null(c.beta)},
                            {"std_error", number_or_null(c.std_error)},
                            {"t", number_or_null(c.t_stat)},
                            {"p", number_or_null(c.p_value)}});
  }
  const auto& a = f.anova;
  return json{
      {"spec",
       {{"response", f.spec.response},
        {"predictors", f.spec.predictors},
        {"intercept", f.spec.intercept}}},
      {"n", f.n},
      {"coefficients", std::move(coefficients)},
      {"r", number_or_null(f.multiple_r())},
      {"r_squared", number_or_null(f.r_squared)},
      {"adj_r_squared", number_or_null(f.adj_r_squared)},
      {"std_error_estimate", number_or_null(f.std_error_estimate)},
      {"anova",
       {{"ss_regression", number_or_null(a.ss_regression)},
        {"ss_residual", number_or_null(a.ss_residual)},
        {"ss_total", number_or_null(a.ss_total)},
        {"df_regression", a.df_regression},
        {"df_residual", a.df_residual},
        {"df_total", a.df_total},
        {"ms_regression", number_or_null(a.ms_regression)},
        {"ms_residual", number_or_null(a.ms_residual)},
        {"f", number_or_null(a.f_stat)},
        {"p", number_or_null(a.p_value)}}}};
}

std::string pad(std::string s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  return left ? s + std::string(width - s.size(), ' ')
              : std::string(width - s.size(), ' ') + s;
}

// Simple right-aligned grid; the first column is left-aligned.
std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      widths[j] = std::max(widths[j], row[j].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += "  ";
      line += pad(row[j], widths[j], j == 0);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string fit_table(const FitResult& f) {
  std::string out;
  std::string predictors;
  for (const auto& name : f.spec.predictors) predictors += ", " + name;
  out += "Coefficients (Dependent Variable: " + f.spec.response + ")\n";
  std::vector<std::vector<std::string>> rows{
      {"", "Regression coefficients", "Std. Error", "t", "p-value"}};
  for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
    const auto& c = f.coefficients[k];
    rows.push_back({"b" + std::to_string(k) + " " + c.name, fixed(c.beta, 3),
                    fixed(c.std_error, 3), fixed(c.t_stat, 3),
                    fixed(c.p_value, 3)});
  }
  out += grid(rows);

  out += "\nModel Summary\n";
  out += grid({{"R", "R Square", "Adjusted R Square",
                "Std. Error of the Estimate"},
               {fixed(f.multiple_r(), 3), fixed(f.r_squared, 3),
                fixed(f.adj_r_squared, 3), fixed(f.std_error_estimate, 2)}});

  const auto& a = f.anova;
  out += "\nANOVA\n";
  out += grid({{"", "Sum of Squares", "df", "Mean Square", "F", "Sig."},
               {"Regression", display_sum(a.ss_regression),
                std::to_string(a.df_regression), display_sum(a.ms_regression),
                fixed(a.f_stat, 3), fixed(a.p_value, 3)},
               {"Residual", display_sum(a.ss_residual),
                std::to_string(a.df_residual), display_sum(a.ms_residual), "",
                ""},
               {"Total", display_sum(a.ss_total), std::to_string(a.df_total), "",
                "", ""}});
  out += "Predictors: (Constant)" + predictors + "\n";
  out += "Dependent Variable: " + f.spec.response + "\n";
  return out;
}

std::string csv_field(double v) {
  return std::isfinite(v) ? format_number(v) : std::string();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

std::string fixed(double value, int decimals) {
  if (std::isnan(value)) return "NaN";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  // No negative zero in displays.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string display_sum(double value) {
  if (!std::isfinite(value)) return fixed(value, 0);
  const double mag = std::fabs(value);
  if (mag >= 1e10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3E", value);
    return buf;
  }
  int digits = mag >= 1.0 ? static_cast<int>(std::floor(std::log10(mag))) + 1 : 1;
  return fixed(value, std::clamp(10 - digits, 0, 3));
}

std::string render_mood(const MoodReport& report, OutputFormat format) {
  const std::pair<const char*, const MetricValue*> metrics[] = {
      {"MHF", &report.mhf}, {"AHF", &report.ahf}, {"MIF", &report.mif},
      {"AIF", &report.aif}, {"PF", &report.pf},   {"CF", &report.cf}};
  switch (format) {
    case OutputFormat::kJson:
      return mood_json(report).dump(2) + "\n";
    case OutputFormat::kCsv: {
      std::string out = "metric,value,numerator,denominator,undefined_reason\n";
      for (const auto& [name, m] : metrics) {
        out += std::string(name) + "," + csv_field(m->value()) + "," +
               std::to_string(m->numerator) + "," +
               std::to_string(m->denominator) + "," +
               m->undefined_reason.value_or("") + "\n";
      }
      return out;
    }
    case OutputFormat::kTable: {
      std::vector<std::vector<std::string>> rows{
          {"Metric", "Value", "Numerator", "Denominator"}};
      for (const auto& [name, m] : metrics) {
        rows.push_back({name,
                        m->defined() ? fixed(m->value(), 4)
                                     : "undefined (" + *m->undefined_reason + ")",
                        std::to_string(m->numerator),
                        std::to_string(m->denominator)});
      }
      return grid(rows) + "TC = " + std::to_string(report.tc) + "\n";
    }
  }
  return {};
}

std::string render_fit(const FitResult& fit, OutputFormat format) {
  return render_fits(std::span<const FitResult>(&fit, 1), format);
}

std::string render_fits(std::span<const FitResult> fits, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      if (fits.size() == 1) return fit_json(fits.front()).dump(2) + "\n";
      json arr = json::array();
      for (const auto& f : fits) arr.push_back(fit_json(f));
      return arr.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::string out = "response,name,beta,std_error,t,p\n";
      for (const auto& f : fits) {
        for (const auto& c : f.coefficients) {
          out += f.spec.response + "," + c.name + "," + csv_field(c.beta) + "," +
                 csv_field(c.std_error) + "," + csv_field(c.t_stat) + "," +
                 csv_field(c.p_value) + "\n";
        }
      }
      return out;
    }
    case OutputFormat::kTable: {
      std::string out;
      for (std::size_t i = 0; i < fits.size(); ++i) {
        if (i > 0) out += "\n";
        out += fit_table(fits[i]);
      }
      return out;
    }
  }
  return {};
}

std::string render_dataset(const Dataset& data, OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv:
      return write_csv_text(data);
    case OutputFormat::kJson: {
      json j{{"provenance", data.provenance()},
             {"columns", data.columns()},
             {"rows", data.rows()}};
      return j.dump(2) + "\n";
    }
    case OutputFormat::kTable: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{""};
      header.insert(header.end(), data.columns().begin(), data.columns().end());
      rows.push_back(std::move(header));
      for (std::size_t r = 0; r < data.row_count(); ++r) {
        std::vector<std::string> row{std::to_string(r + 1)};
        for (double v : data.rows()[r]) row.push_back(format_number(v));
        rows.push_back(std::move(row));
      }
      std::vector<std::string> total{"Total N"};
      total.insert(total.end(), data.column_count(),
                   std::to_string(data.row_count()));
      rows.push_back(std::move(total));
      return grid(rows);
    }
  }
  return {};
}

std::string render_diagnostics(std::span<const Diagnostic> diagnostics,
                               OutputFormat format,
                               const omdl::Document* document) {
  auto span_of = [&](const Diagnostic& d) -> const omdl::SourceSpan* {
    return document ? document->class_span(d.class_name) : nullptr;
  };
  if (format == OutputFormat::kJson) {
    json arr = json::array();
    for (const auto& d : diagnostics) {
      json item{{"code", diagnostic_code_name(d.code)},
                {"class", d.class_name},
                {"message", d.message}};
      if (const auto* span = span_of(d)) {
        item["line"] = span->line;
        item["column"] = span->column;
      }
      arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const auto& d : diagnostics) {
    if (const auto* span = span_of(d)) {
      out += std::to_string(span->line) + ":" + std::to_string(span->column) +
             ": ";
    }
    out += std::string(diagnostic_code_name(d.code)) + ": " + d.message + "\n";
  }
  return out;
}

}  // namespace moodkit
