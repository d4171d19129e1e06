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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "moodkit/dataset.hpp"

namespace moodkit {

struct ModelSpec {
  std::string response;
  std::vector<std::string> predictors;
  bool intercept = true;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

struct CoefficientEstimate {
  std::string name;
  double beta = 0;
  double std_error = 0;
  double t_stat = 0;
  double p_value = 1;  // two-sided, df = n - p
};

struct AnovaTable {
  double ss_regression = 0;
  double ss_residual = 0;
  double ss_total = 0;
  std::size_t df_regression = 0;
  std::size_t df_residual = 0;
  std::size_t df_total = 0;
  double ms_regression = 0;
  double ms_residual = 0;
  double f_stat = 0;
  double p_value = 1;
};

struct FitResult {
  ModelSpec spec;  // column names resolved against the dataset
  std::size_t n = 0;
  std::vector<CoefficientEstimate> coefficients;  // intercept first
  double r_squared = 0;
  double adj_r_squared = 0;
  double std_error_estimate = 0;
  AnovaTable anova;
  std::vector<double> residuals;  // in dataset row order

  double multiple_r() const;
};

inline constexpr std::string_view kInterceptName = "(Constant)";

// Rank tolerance: a column is dependent when its triangular pivot falls below
// this fraction of the largest pivot.
inline constexpr double kRankTolerance = 1e-10;

/// Ordinary least squares with intercept, solved by Householder QR.
///
/// Coefficients are reported in raw units. Standard errors use the unbiased
/// residual variance and the diagonal of (R^T R)^-1 taken from the triangular
/// factor. Errors:
///   kUnknownColumn       a named column is absent
///   kInvalidSpec         response among predictors, duplicate predictors,
///                        or intercept disabled
///   kInsufficientData    n <= p
///   kDegenerateResponse  the response is constant (zero total variance)
///   kRankDeficient       design columns are linearly dependent; the message
///                        names the first dependent column
FitResult fit(const Dataset& data, const ModelSpec& spec);

// The decomposition about the response mean computed by fit().
AnovaTable anova(const FitResult& fit);

// beta0 + sum(beta_k * x_k). Input keys accept the LOC/NOL alias.
// Throws Error(kMissingPredictor) naming the first absent predictor.
double predict(const FitResult& fit, const std::map<std::string, double>& inputs);

// Response plus every other column of the dataset as predictors.
ModelSpec interchange_spec(const Dataset& data, std::string_view response);

// The four size models LOC, NOC, NOM, NOA, each regressed on the other three.
std::vector<FitResult> fit_all_interchange(const Dataset& data);

// Elementwise log10 (or natural log) with names suffixed "_log10" ("_ln").
// Throws Error(kNonpositiveValue) with the row and column of the offender.
Dataset log_transform(const Dataset& data, bool base10 = true);

}  // namespace moodkit
