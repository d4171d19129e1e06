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

#include "moodkit/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "moodkit/error.hpp"
#include "moodkit/special_functions.hpp"

namespace moodkit {

namespace {

constexpr std::string_view kResponseOrder[] = {"NOL", "NOC", "NOM", "NOA"};

// Householder QR of a column-major n x p design, applied to y in place.
// After factorization columns hold R in their upper part.
struct QrFactorization {
  std::vector<std::vector<double>> columns;
  std::vector<double> qty;  // Q^T y

  double r(std::size_t row, std::size_t col) const { return columns[col][row]; }
};

QrFactorization householder_qr(std::vector<std::vector<double>> columns,
                               std::vector<double> y) {
  const std::size_t p = columns.size();
  const std::size_t n = y.size();
  std::vector<double> v(n);
  for (std::size_t k = 0; k < p; ++k) {
    auto& ak = columns[k];
    double scale = 0.0;
    for (std::size_t i = k; i < n; ++i) scale = std::max(scale, std::fabs(ak[i]));
    if (scale == 0.0) continue;
    double norm = 0.0;
    for (std::size_t i = k; i < n; ++i) norm += (ak[i] / scale) * (ak[i] / scale);
    norm = scale * std::sqrt(norm);
    const double alpha = ak[k] > 0 ? -norm : norm;

    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      v[i] = ak[i];
      if (i == k) v[i] -= alpha;
      vnorm2 += v[i] * v[i];
    }
    if (vnorm2 == 0.0) continue;
    auto reflect = [&](std::vector<double>& target) {
      double dot = 0.0;
      for (std::size_t i = k; i < n; ++i) dot += v[i] * target[i];
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = k; i < n; ++i) target[i] -= f * v[i];
    };
    for (std::size_t j = k + 1; j < p; ++j) reflect(columns[j]);
    reflect(y);
    ak[k] = alpha;
    for (std::size_t i = k + 1; i < n; ++i) ak[i] = 0.0;
  }
  return {std::move(columns), std::move(y)};
}

void check_spec(const ModelSpec& spec) {
  if (!spec.intercept) {
    throw Error(ErrorCode::kInvalidSpec,
                "models without an intercept are not supported");
  }
  if (spec.predictors.empty()) {
    throw Error(ErrorCode::kInvalidSpec, "at least one predictor is required");
  }
}

AnovaTable make_anova(double ss_regression, double ss_residual,
                      double ss_total, std::size_t n, std::size_t p) {
  AnovaTable t;
  t.ss_regression = ss_regression;
  t.ss_residual = ss_residual;
  t.ss_total = ss_total;
  t.df_regression = p - 1;
  t.df_residual = n - p;
  t.df_total = n - 1;
  t.ms_regression = ss_regression / static_cast<double>(t.df_regression);
  t.ms_residual = ss_residual / static_cast<double>(t.df_residual);
  if (t.ms_residual > 0.0) {
    t.f_stat = t.ms_regression / t.ms_residual;
    t.p_value = special::f_upper_p(t.f_stat, static_cast<int>(t.df_regression),
                                   static_cast<int>(t.df_residual));
  } else {
    t.f_stat = std::numeric_limits<double>::infinity();
    t.p_value = 0.0;
  }
  return t;
}

}  // namespace

double FitResult::multiple_r() const { return std::sqrt(r_squared); }

FitResult fit(const Dataset& data, const ModelSpec& spec) {
  check_spec(spec);
  ModelSpec resolved;
  resolved.intercept = true;
  const auto response_col = data.column_index(spec.response);
  resolved.response = data.columns()[response_col];
  std::vector<std::size_t> predictor_cols;
  for (const auto& name : spec.predictors) {
    const auto j = data.column_index(name);
    if (j == response_col) {
      throw Error(ErrorCode::kInvalidSpec,
                  "response '" + resolved.response + "' listed as a predictor");
    }
    if (std::find(predictor_cols.begin(), predictor_cols.end(), j) !=
        predictor_cols.end()) {
      throw Error(ErrorCode::kInvalidSpec,
                  "predictor '" + data.columns()[j] + "' listed twice");
    }
    predictor_cols.push_back(j);
    resolved.predictors.push_back(data.columns()[j]);
  }

  const std::size_t n = data.row_count();
  const std::size_t p = predictor_cols.size() + 1;
  if (n <= p) {
    throw Error(ErrorCode::kInsufficientData,
                "need more than " + std::to_string(p) + " rows to fit " +
                    std::to_string(p) + " coefficients, have " +
                    std::to_string(n));
  }

  std::vector<double> y(n);
  std::vector<std::vector<double>> design(p, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = data.rows()[i];
    y[i] = row[response_col];
    for (std::size_t k = 0; k + 1 < p; ++k) design[k + 1][i] = row[predictor_cols[k]];
  }
  if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); })) {
    throw Error(ErrorCode::kDegenerateResponse,
                "response '" + resolved.response +
                    "' is constant; the model has zero total variance");
  }

  const auto qr = householder_qr(design, y);

  double max_pivot = 0.0;
  for (std::size_t k = 0; k < p; ++k) max_pivot = std::max(max_pivot, std::fabs(qr.r(k, k)));
  for (std::size_t k = 0; k < p; ++k) {
    if (!(std::fabs(qr.r(k, k)) > kRankTolerance * max_pivot)) {
      const std::string name =
          k == 0 ? std::string(kInterceptName) : resolved.predictors[k - 1];
      throw Error(ErrorCode::kRankDeficient,
                  "design matrix is rank deficient: column '" + name +
                      "' is linearly dependent on the preceding columns");
    }
  }

  // beta = R^-1 Q^T y
  std::vector<double> beta(p);
  for (std::size_t k = p; k-- > 0;) {
    double s = qr.qty[k];
    for (std::size_t j = k + 1; j < p; ++j) s -= qr.r(k, j) * beta[j];
    beta[k] = s / qr.r(k, k);
  }

  // R^-1, upper triangular; (X^T X)^-1 = R^-1 R^-T.
  std::vector<std::vector<double>> rinv(p, std::vector<double>(p, 0.0));
  for (std::size_t c = 0; c < p; ++c) {
    for (std::size_t k = c + 1; k-- > 0;) {
      double s = k == c ? 1.0 : 0.0;
      for (std::size_t j = k + 1; j <= c; ++j) s -= qr.r(k, j) * rinv[j][c];
      rinv[k][c] = s / qr.r(k, k);
    }
  }

  double y_mean = 0.0;
  for (double v : y) y_mean += v;
  y_mean /= static_cast<double>(n);

  FitResult result;
  result.spec = std::move(resolved);
  result.n = n;
  result.residuals.resize(n);
  double ss_residual = 0.0, ss_regression = 0.0, ss_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double fitted = 0.0;
    for (std::size_t k = 0; k < p; ++k) fitted += design[k][i] * beta[k];
    const double e = y[i] - fitted;
    result.residuals[i] = e;
    ss_residual += e * e;
    ss_regression += (fitted - y_mean) * (fitted - y_mean);
    ss_total += (y[i] - y_mean) * (y[i] - y_mean);
  }

  result.anova = make_anova(ss_regression, ss_residual, ss_total, n, p);
  const double df_residual = static_cast<double>(n - p);
  result.r_squared = std::clamp(1.0 - ss_residual / ss_total, 0.0, 1.0);
  result.adj_r_squared = 1.0 - (1.0 - result.r_squared) *
                                   static_cast<double>(n - 1) / df_residual;
  result.std_error_estimate = std::sqrt(result.anova.ms_residual);

  for (std::size_t k = 0; k < p; ++k) {
    CoefficientEstimate c;
    c.name = k == 0 ? std::string(kInterceptName) : result.spec.predictors[k - 1];
    c.beta = beta[k];
    double diag = 0.0;
    for (std::size_t j = k; j < p; ++j) diag += rinv[k][j] * rinv[k][j];
    c.std_error = std::sqrt(result.anova.ms_residual * diag);
    c.t_stat = c.beta / c.std_error;
    c.p_value = std::isnan(c.t_stat)
                    ? 1.0
                    : special::t_two_sided_p(c.t_stat, static_cast<int>(n - p));
    result.coefficients.push_back(std::move(c));
  }
  return result;
}

AnovaTable anova(const FitResult& fit) { return fit.anova; }

double predict(const FitResult& fit, const std::map<std::string, double>& inputs) {
  // Reuse Dataset's alias handling for the lookup.
  std::vector<std::string> names;
  std::vector<double> values;
  for (const auto& [k, v] : inputs) {
    names.push_back(k);
    values.push_back(v);
  }
  const Dataset lookup(names, {}, {});
  double y = fit.coefficients.front().beta;
  for (std::size_t k = 1; k < fit.coefficients.size(); ++k) {
    const auto& name = fit.coefficients[k].name;
    const auto j = lookup.find_column(name);
    if (!j) {
      throw Error(ErrorCode::kMissingPredictor,
                  "missing value for predictor '" + name + "'");
    }
    y += fit.coefficients[k].beta * values[*j];
  }
  return y;
}

ModelSpec interchange_spec(const Dataset& data, std::string_view response) {
  const auto r = data.column_index(response);
  ModelSpec spec;
  spec.response = data.columns()[r];
  for (std::size_t j = 0; j < data.column_count(); ++j) {
    if (j != r) spec.predictors.push_back(data.columns()[j]);
  }
  return spec;
}

std::vector<FitResult> fit_all_interchange(const Dataset& data) {
  std::vector<std::string> names;
  for (auto name : kResponseOrder) {
    names.push_back(data.columns()[data.column_index(name)]);
  }
  std::vector<FitResult> out;
  for (const auto& response : names) {
    ModelSpec spec;
    spec.response = response;
    for (const auto& other : names) {
      if (other != response) spec.predictors.push_back(other);
    }
    out.push_back(fit(data, spec));
  }
  return out;
}

Dataset log_transform(const Dataset& data, bool base10) {
  const std::string suffix = base10 ? "_log10" : "_ln";
  std::vector<std::string> columns;
  for (const auto& c : data.columns()) columns.push_back(c + suffix);
  std::vector<std::vector<double>> rows = data.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      const double v = rows[r][j];
      if (!(v > 0.0)) {
        throw Error(ErrorCode::kNonpositiveValue,
                    "row " + std::to_string(r + 1) + ", column " +
                        data.columns()[j] + ": cannot take log of " +
                        format_number(v));
      }
      rows[r][j] = base10 ? std::log10(v) : std::log(v);
    }
  }
  return Dataset(std::move(columns), std::move(rows),
                 data.provenance() + "|" + (base10 ? "log10" : "ln"));
}

}  // namespace moodkit
