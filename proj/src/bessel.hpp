// polyaxial: numerical harmonic analysis on the positive orthant with
// power-weighted measures.
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

#include <vector>

namespace pax {

// Normalized Bessel function of the first kind,
//
//   j_gamma(x) = Gamma(gamma+1) * (2/x)^gamma * J_gamma(x),
//
// rescaled so that j_gamma(0) = 1. Closed forms: j_{-1/2}(x) = cos(x) and
// j_{1/2}(x) = sin(x)/x. Supported domain: gamma > -1, x >= 0. Relative
// accuracy is ~1e-13 (measured against the local oscillation envelope near
// zeros of the function) for x <= 1e4 and gamma <= 50.
//
// Evaluation uses three regimes: a double-double power series with a
// cancellation monitor, a self-validating Hankel-type asymptotic expansion
// for large x, and an adaptive-precision MPFR series for the remaining
// (large-order, moderate-argument) band where neither fixed-precision route
// can deliver the target accuracy.
double normalized_bessel(double gamma, double x);

// Product kernel prod_i j_{alpha_i}(lambda_i * x_i). All coordinates must be
// >= 0; the three vectors must have equal length. Factors are multiplied in
// index order; every factor lies in [-1, 1], so no rescaling is needed.
double bessel_kernel(const std::vector<double>& alpha,
                     const std::vector<double>& lambda,
                     const std::vector<double>& x);

// Centered finite-difference residual |u'' + ((2*gamma+1)/x) u' + u| of the
// defining ODE at x, with u = j_gamma. Requires x > 2h > 0. Used by the test
// suite as an independent consistency check on the evaluator.
double bessel_ode_residual(double gamma, double x, double h);

}  // namespace pax
