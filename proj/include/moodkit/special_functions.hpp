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

namespace moodkit::special {

// Natural log of the gamma function. Throws Error(kDomain) for x <= 0.
double ln_gamma(double x);

// Regularized incomplete beta I_x(a, b), evaluated by continued fraction
// with the usual symmetry switch at x > (a + 1) / (a + b + 2).
// Throws Error(kDomain) unless 0 <= x <= 1 and a, b > 0.
double reg_inc_beta(double x, double a, double b);

// P(|T| >= |t|) for Student's t with df degrees of freedom. In [0, 1].
double t_two_sided_p(double t, int df);

// P(F >= f) for Snedecor's F with (df1, df2) degrees of freedom. In [0, 1].
double f_upper_p(double f, int df1, int df2);

}  // namespace moodkit::special
