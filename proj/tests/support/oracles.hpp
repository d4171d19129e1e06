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

// Test-only oracles. Nothing here calls into the code paths it checks.

#include <cmath>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "moodkit/class_model.hpp"

namespace moodkit::testing {

// ---------------------------------------------------------------------------
// Distribution oracles by numerical integration of the densities. The
// normalising constants use std::lgamma.

inline double beta_fn(double a, double b) {
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

inline double quad_inc_beta(double x, double a, double b) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double whole = beta_fn(a, b);
  if (x <= 0.5) {
    auto lower = [a, b](double t) {
      return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0);
    };
    return integrator.integrate(lower, 0.0, x) / whole;
  }
  // On [x, 1] a positive tc is 1 - t, exact near the upper endpoint.
  auto upper = [a, b](double t, double tc) {
    const double one_minus = tc > 0.0 ? tc : 1.0 - t;
    return std::pow(t, a - 1.0) * std::pow(one_minus, b - 1.0);
  };
  return 1.0 - integrator.integrate(upper, x, 1.0) / whole;
}

inline double quad_t_two_sided(double t, int df) {
  const double nu = df;
  const double c = std::exp(std::lgamma((nu + 1) / 2) - std::lgamma(nu / 2)) /
                   std::sqrt(nu * M_PI);
  auto pdf = [&](double x) { return c * std::pow(1 + x * x / nu, -(nu + 1) / 2); };
  const double a = std::fabs(t);
  double err = 0;
  const double central = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      pdf, 0.0, a, 15, 1e-14, &err);
  return 1.0 - 2.0 * central;
}

inline double quad_f_upper(double f, int df1, int df2) {
  const double d1 = df1, d2 = df2;
  const double lognorm = 0.5 * d1 * std::log(d1) + 0.5 * d2 * std::log(d2) -
                         std::log(beta_fn(d1 / 2, d2 / 2));
  auto pdf = [&](double x) {
    if (x <= 0) return 0.0;
    return std::exp(lognorm + (d1 / 2 - 1) * std::log(x) -
                    (d1 + d2) / 2 * std::log(d2 + d1 * x));
  };
  if (f <= 0) return 1.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  return 1.0 - integrator.integrate(pdf, 0.0, f);
}

// ---------------------------------------------------------------------------
// Least squares via normal equations in 50-digit arithmetic.

using BigFloat = boost::multiprecision::cpp_bin_float_50;

// rows: observations; columns of x are predictors (intercept added here).
inline std::vector<double> normal_equations_ols(
    const std::vector<std::vector<double>>& x, const std::vector<double>& y) {
  const std::size_t n = y.size();
  const std::size_t p = x.empty() ? 1 : x.front().size() + 1;
  auto design = [&](std::size_t i, std::size_t k) -> BigFloat {
    return k == 0 ? BigFloat(1) : BigFloat(x[i][k - 1]);
  };
  std::vector<std::vector<BigFloat>> a(p, std::vector<BigFloat>(p + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) a[r][c] += design(i, r) * design(i, c);
      a[r][p] += design(i, r) * BigFloat(y[i]);
    }
  }
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < p; ++r) {
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < p; ++r) {
      if (r == col) continue;
      const BigFloat factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= p; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<double> beta(p);
  for (std::size_t k = 0; k < p; ++k) {
    beta[k] = static_cast<double>(a[k][p] / a[k][k]);
  }
  return beta;
}

// ---------------------------------------------------------------------------
// MOOD metrics by naive enumeration over explicit inheritance paths.

struct NaiveRatio {
  std::size_t numerator = 0;
  std::size_t denominator = 0;
};

struct NaiveMood {
  NaiveRatio mhf, ahf, mif, aif, pf, cf;
};

class NaiveMoodOracle {
 public:
  explicit NaiveMoodOracle(const ClassModel& model) : model_(model) {
    const auto& cs = model.classes();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::vector<std::size_t> ps;
      for (const auto& p : cs[i].parents) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
          if (cs[j].name == p) ps.push_back(j);
        }
      }
      parents_.push_back(ps);
    }
  }

  bool is_ancestor(std::size_t ancestor, std::size_t cls) const {
    for (auto p : parents_[cls]) {
      if (p == ancestor || is_ancestor(ancestor, p)) return true;
    }
    return false;
  }

  // (origin, name) pairs reachable along some path on which no earlier class
  // (the starting class included) declares the same name.
  std::set<std::pair<std::size_t, std::string>> inherited(std::size_t cls,
                                                          bool methods) const {
    std::set<std::pair<std::size_t, std::string>> found;
    std::vector<std::size_t> path{cls};
    walk(path, methods, found);
    return found;
  }

  NaiveMood compute() const {
    const auto& cs = model_.classes();
    const std::size_t tc = cs.size();
    NaiveMood r;
    for (std::size_t i = 0; i < tc; ++i) {
      const auto& c = cs[i];
      std::size_t hidden_m = 0, hidden_a = 0, overrides = 0, news = 0;
      for (const auto& m : c.methods) {
        if (m.visibility == Visibility::kHidden) ++hidden_m;
        if (m.override_target) ++overrides; else ++news;
      }
      for (const auto& a : c.attributes) {
        if (a.visibility == Visibility::kHidden) ++hidden_a;
      }
      std::size_t dc = 0;
      for (std::size_t j = 0; j < tc; ++j) {
        if (j != i && is_ancestor(i, j)) ++dc;
      }
      const auto mi = inherited(i, true).size();
      const auto ai = inherited(i, false).size();
      r.mhf.numerator += hidden_m;
      r.mhf.denominator += c.methods.size();
      r.ahf.numerator += hidden_a;
      r.ahf.denominator += c.attributes.size();
      r.mif.numerator += mi;
      r.mif.denominator += c.methods.size() + mi;
      r.aif.numerator += ai;
      r.aif.denominator += c.attributes.size() + ai;
      r.pf.numerator += overrides;
      r.pf.denominator += news * dc;
      for (std::size_t j = 0; j < tc; ++j) {
        if (j == i || is_ancestor(j, i)) continue;
        for (const auto& u : c.uses) {
          if (u == cs[j].name) {
            ++r.cf.numerator;
            break;
          }
        }
      }
    }
    r.cf.denominator = tc * tc - tc;
    return r;
  }

 private:
  bool declares(std::size_t cls, const std::string& name, bool methods) const {
    const auto& c = model_.classes()[cls];
    if (methods) {
      for (const auto& m : c.methods) if (m.name == name) return true;
    } else {
      for (const auto& a : c.attributes) if (a.name == name) return true;
    }
    return false;
  }

  void walk(std::vector<std::size_t>& path, bool methods,
            std::set<std::pair<std::size_t, std::string>>& found) const {
    const auto tip = path.back();
    for (auto p : parents_[tip]) {
      path.push_back(p);
      std::vector<std::string> names;
      const auto& c = model_.classes()[p];
      if (methods) {
        for (const auto& m : c.methods) names.push_back(m.name);
      } else {
        for (const auto& a : c.attributes) names.push_back(a.name);
      }
      for (const auto& name : names) {
        bool blocked = false;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
          if (declares(path[k], name, methods)) blocked = true;
        }
        if (!blocked) found.emplace(p, name);
      }
      walk(path, methods, found);
      path.pop_back();
    }
  }

  const ClassModel& model_;
  std::vector<std::vector<std::size_t>> parents_;
};

}  // namespace moodkit::testing
