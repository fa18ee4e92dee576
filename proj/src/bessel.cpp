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

#include "bessel.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "dd.hpp"
#include "errors.hpp"

namespace pax {
namespace {

constexpr int kMaxSeriesTerms = 500;

// Power series j_gamma(x) = sum_k (-q)^k / (k! * (gamma+1)_k), q = (x/2)^2,
// evaluated in double-double arithmetic. The running maximum term magnitude
// is monitored: if the final sum is small against it, too many digits were
// cancelled for the 106-bit working precision and the evaluation is
// rejected (the caller falls through to another regime).
std::optional<double> series_dd(double gamma, double x) {
  const double half = 0.5 * x;
  const DD q = two_prod(half, half);
  DD sum = dd_from(1.0);
  DD term = dd_from(1.0);
  double max_mag = 1.0;
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    // term *= -q / (k * (gamma + k)); gamma + k is kept exact as a DD value.
    const DD gk = two_sum(gamma, static_cast<double>(k));
    const DD denom = dd_mul_d(gk, static_cast<double>(k));
    term = dd_div(dd_mul(term, dd_neg(q)), denom);
    sum = dd_add(sum, term);
    const double tmag = std::fabs(term.hi);
    if (tmag > max_mag) max_mag = tmag;
    if (tmag < 1e-35 * std::fabs(sum.hi) + 1e-320) {
      if (max_mag > 1e14 * std::fabs(sum.hi)) return std::nullopt;
      return dd_to_double(sum);
    }
  }
  return std::nullopt;
}

// Hankel-type large-argument expansion of J_gamma, rescaled to the
// normalized function. Divergent-series truncation at the smallest term,
// accepted only when that term is negligible against the oscillation
// envelope, so the branch validates itself and never returns a value the
// expansion cannot support.
std::optional<double> asymptotic(double gamma, double x) {
  const double mu = 4.0 * gamma * gamma;
  double c = 1.0;
  double p_sum = 1.0;
  double q_sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double err = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= 400; ++m) {
    const double odd = 2.0 * m - 1.0;
    c *= (mu - odd * odd) / (8.0 * m * x);
    const double mag = std::fabs(c);
    if (m > 1 && mag >= prev) {
      err = mag;  // smallest achievable truncation error reached
      break;
    }
    const double sign = (((m / 2) % 2) == 0) ? 1.0 : -1.0;
    if (m % 2 == 1) {
      q_sum += sign * c;
    } else {
      p_sum += sign * c;
    }
    prev = mag;
    err = mag;
    if (mag == 0.0 || mag <= 1e-17 * (std::fabs(p_sum) + std::fabs(q_sum))) {
      break;
    }
  }
  const double envelope = std::hypot(p_sum, q_sum);
  if (!(err <= 1e-14 * envelope)) return std::nullopt;

  // Phase omega = x - (gamma/2 + 1/4)*pi, computed and reduced mod 2*pi in
  // double-double so that cos/sin lose nothing for x up to 1e4.
  const DD phase_factor = two_sum(0.5 * gamma, 0.25);
  DD omega = dd_sub(dd_from(x), dd_mul(dd_pi(), phase_factor));
  const double turns = std::nearbyint(omega.hi / (2.0 * M_PI));
  omega = dd_sub(omega, dd_mul_d(dd_two_pi(), turns));
  const double ch = std::cos(omega.hi);
  const double sh = std::sin(omega.hi);
  const double co = ch - omega.lo * sh;
  const double si = sh + omega.lo * ch;

  // j_gamma(x) = Gamma(gamma+1) (2/x)^gamma sqrt(2/(pi x)) (P cos - Q sin).
  const double log_pref = std::lgamma(gamma + 1.0) + gamma * std::log(2.0 / x) +
                          0.5 * std::log(2.0 / (M_PI * x));
  return std::exp(log_pref) * (p_sum * co - q_sum * si);
}

// Arbitrary-precision series fallback for the band where the double-double
// series cancels too heavily and the asymptotic expansion has not converged
// (large gamma with moderate x). Runs once at 192 bits to measure the
// cancellation, then again at whatever precision that measurement demands.
double series_mpfr(double gamma, double x) {
  mpfr_prec_t prec = 192;
  double out = 0.0;
  for (int attempt = 0; attempt < 12; ++attempt) {
    mpfr_t q, sum, term, tmp;
    mpfr_init2(q, prec);
    mpfr_init2(sum, prec);
    mpfr_init2(term, prec);
    mpfr_init2(tmp, prec);

    mpfr_set_d(q, 0.5 * x, MPFR_RNDN);
    mpfr_sqr(q, q, MPFR_RNDN);
    mpfr_set_ui(sum, 1, MPFR_RNDN);
    mpfr_set_ui(term, 1, MPFR_RNDN);

    mpfr_exp_t max_exp = 0;
    bool converged = false;
    const long max_iter = 400000;
    for (long k = 1; k <= max_iter; ++k) {
      mpfr_mul(term, term, q, MPFR_RNDN);
      mpfr_neg(term, term, MPFR_RNDN);
      // gamma + k formed in working precision: the double rounding of the
      // sum would otherwise be amplified by the series cancellation.
      mpfr_set_d(tmp, gamma, MPFR_RNDN);
      mpfr_add_si(tmp, tmp, k, MPFR_RNDN);
      mpfr_mul_si(tmp, tmp, k, MPFR_RNDN);
      mpfr_div(term, term, tmp, MPFR_RNDN);
      mpfr_add(sum, sum, term, MPFR_RNDN);
      if (!mpfr_zero_p(term)) {
        max_exp = std::max(max_exp, mpfr_get_exp(term));
      }
      if (mpfr_zero_p(term) ||
          (!mpfr_zero_p(sum) &&
           mpfr_get_exp(term) < mpfr_get_exp(sum) - (prec + 16))) {
        converged = true;
        break;
      }
    }
    const mpfr_exp_t res_exp = mpfr_zero_p(sum) ? 0 : mpfr_get_exp(sum);
    const mpfr_prec_t needed = 64 + static_cast<mpfr_prec_t>(max_exp - res_exp);
    out = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(q, sum, term, tmp, static_cast<mpfr_ptr>(nullptr));
    if (converged && prec >= needed) {
      return out;
    }
    prec = std::max<mpfr_prec_t>(needed, prec * 2);
  }
  throw NumericError("normalized_bessel: arbitrary-precision series did not converge");
}

}  // namespace

double normalized_bessel(double gamma, double x) {
  if (!std::isfinite(gamma) || gamma <= -1.0) {
    throw InvalidArgument("normalized_bessel: order must be finite and > -1, got " +
                          std::to_string(gamma));
  }
  if (!std::isfinite(x) || x < 0.0) {
    throw InvalidArgument("normalized_bessel: argument must be finite and >= 0");
  }
  if (x == 0.0) return 1.0;
  if (gamma == -0.5) return std::cos(x);
  if (gamma == 0.5) return std::sin(x) / x;

  if (x >= 10.0 && x >= std::fabs(gamma)) {
    if (auto r = asymptotic(gamma, x)) return *r;
  }
  if (auto r = series_dd(gamma, x)) return *r;
  if (auto r = asymptotic(gamma, x)) return *r;
  return series_mpfr(gamma, x);
}

double bessel_kernel(const std::vector<double>& alpha,
                     const std::vector<double>& lambda,
                     const std::vector<double>& x) {
  if (alpha.size() != lambda.size() || alpha.size() != x.size()) {
    throw InvalidArgument("bessel_kernel: alpha, lambda, x must have equal length");
  }
  double prod = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    prod *= normalized_bessel(alpha[i], lambda[i] * x[i]);
  }
  return prod;
}

double bessel_ode_residual(double gamma, double x, double h) {
  if (!(h > 0.0) || !(x > 2.0 * h)) {
    throw InvalidArgument("bessel_ode_residual: requires x > 2h > 0");
  }
  const double fp = normalized_bessel(gamma, x + h);
  const double f0 = normalized_bessel(gamma, x);
  const double fm = normalized_bessel(gamma, x - h);
  const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
  const double d1 = (fp - fm) / (2.0 * h);
  return std::fabs(d2 + (2.0 * gamma + 1.0) / x * d1 + f0);
}

}  // namespace pax
