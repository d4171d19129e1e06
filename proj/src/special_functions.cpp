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

#include "moodkit/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "moodkit/error.hpp"

namespace moodkit::special {

namespace {

[[noreturn]] void domain_error(const std::string& what) {
  throw Error(ErrorCode::kDomain, what);
}

// Lanczos series with g = 671/128 and 14 terms; good to double precision.
constexpr std::array<double, 14> kLanczos{
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,
    -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// Modified Lentz evaluation of the continued fraction for I_x(a, b).
double beta_continued_fraction(double x, double a, double b) {
  constexpr int kMaxIterations = 100000;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  domain_error("incomplete beta continued fraction did not converge for a=" +
               std::to_string(a) + ", b=" + std::to_string(b));
}

// I_x(a, b) given both x and y = 1 - x, so callers that know the complement
// exactly avoid the cancellation in 1 - x.
double inc_beta(double x, double y, double a, double b) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) +
                           a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(x, a, b) / a;
  }
  return 1.0 - front * beta_continued_fraction(y, b, a) / b;
}

double clamp_probability(double p) {
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0) || std::isinf(x)) {
    domain_error("ln_gamma requires a finite x > 0, got " + std::to_string(x));
  }
  double y = x;
  double tmp = x + 671.0 / 128.0;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double series = 0.999999999999997092;
  for (double c : kLanczos) series += c / ++y;
  return tmp + std::log(2.5066282746310005 * series / x);
}

double reg_inc_beta(double x, double a, double b) {
  if (!(x >= 0.0 && x <= 1.0)) {
    domain_error("reg_inc_beta requires 0 <= x <= 1, got " + std::to_string(x));
  }
  if (!(a > 0.0) || !(b > 0.0) || std::isinf(a) || std::isinf(b)) {
    domain_error("reg_inc_beta requires finite a, b > 0");
  }
  return clamp_probability(inc_beta(x, 1.0 - x, a, b));
}

double t_two_sided_p(double t, int df) {
  if (df < 1) domain_error("t distribution requires df >= 1");
  if (std::isnan(t)) domain_error("t statistic is NaN");
  if (t == 0.0) return 1.0;
  if (std::isinf(t)) return 0.0;
  const double t2 = t * t;
  const double n = static_cast<double>(df);
  return clamp_probability(inc_beta(n / (n + t2), t2 / (n + t2), 0.5 * n, 0.5));
}

double f_upper_p(double f, int df1, int df2) {
  if (df1 < 1 || df2 < 1) {
    domain_error("F distribution requires positive degrees of freedom");
  }
  if (!(f >= 0.0)) domain_error("F statistic must be >= 0");
  if (f == 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  const double n1f = static_cast<double>(df1) * f;
  const double n2 = static_cast<double>(df2);
  return clamp_probability(
      inc_beta(n2 / (n2 + n1f), n1f / (n2 + n1f), 0.5 * n2, 0.5 * df1));
}

}  // namespace moodkit::special
