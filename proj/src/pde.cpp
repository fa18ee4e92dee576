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

#include "pde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "sobolev.hpp"

namespace pax {

namespace {

constexpr int kScanPoints = 512;

void require_spectrum(const SpectralDistribution& f, const char* who) {
  if (!f.grid) throw InvalidArgument(std::string(who) + ": missing grid");
  if (f.values.size() != f.grid->size()) {
    throw InvalidArgument(std::string(who) +
                          ": value count does not match grid");
  }
}

}  // namespace

EvenPolynomial::EvenPolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidArgument("polynomial: needs at least one coefficient");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw InvalidArgument("polynomial: coefficients must be finite");
    }
  }
}

double EvenPolynomial::operator()(double t) const {
  double v = 0.0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) v = v * t + coeffs_[j];
  return v;
}

void EvenPolynomial::require_positive(double t_max) const {
  if (!(coeffs_.back() > 0.0)) {
    throw InvalidArgument(
        "polynomial: leading coefficient must be positive for a symbol that "
        "stays positive at infinity");
  }
  for (int i = 0; i <= kScanPoints; ++i) {
    const double t = t_max * static_cast<double>(i) / kScanPoints;
    if (!((*this)(t) > 0.0)) {
      throw InvalidArgument(
          "polynomial: symbol must be strictly positive on [0, inf)");
    }
  }
}

double EvenPolynomial::inverse_symbol_bound(double gain, double t_max) const {
  const double m = static_cast<double>(degree());
  double sup;
  if (gain < m) {
    sup = 0.0;  // (1+t)^{gain}/P -> 0
  } else if (gain == m) {
    sup = 1.0 / coeffs_.back();
  } else {
    return std::numeric_limits<double>::infinity();
  }
  const auto value = [this, gain](double t) {
    return std::pow(1.0 + t, gain) / (*this)(t);
  };
  int best = 0;
  for (int i = 0; i <= kScanPoints; ++i) {
    const double t = t_max * static_cast<double>(i) / kScanPoints;
    if (value(t) > value(t_max * static_cast<double>(best) / kScanPoints)) {
      best = i;
    }
  }
  // Polish the coarse argmax: the function is smooth, so a ternary search
  // in the bracketing cells recovers the interior sup to full precision.
  const double h = t_max / kScanPoints;
  double lo = std::max(0.0, h * (best - 1));
  double hi = std::min(t_max, h * (best + 1));
  for (int iter = 0; iter < 200; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (value(m1) < value(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return std::max(sup, value(0.5 * (lo + hi)));
}

SpectralDistribution solve_helmholtz(const SpectralDistribution& f, double k) {
  require_spectrum(f, "solve_helmholtz");
  if (!std::isfinite(k) || k == 0.0) {
    throw InvalidArgument(
        "solve_helmholtz: k must be nonzero (the symbol k^2 + |xi|^2 would "
        "vanish at the origin)");
  }
  const std::vector<double> t = squared_radii(*f.grid);
  SpectralDistribution u;
  u.grid = f.grid;
  u.values.resize(f.values.size());
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    u.values[j] = f.values[j] / (k * k + t[j]);
  }
  return u;
}

SpectralDistribution solve_polynomial(const SpectralDistribution& f,
                                      const EvenPolynomial& P) {
  require_spectrum(f, "solve_polynomial");
  const std::vector<double> t = squared_radii(*f.grid);
  const double t_max = *std::max_element(t.begin(), t.end());
  P.require_positive(t_max);
  SpectralDistribution u;
  u.grid = f.grid;
  u.values.resize(f.values.size());
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    u.values[j] = f.values[j] / P(t[j]);
  }
  return u;
}

RegularityRecord regularity_report(const SpectralDistribution& f,
                                   const SpectralDistribution& u, double s,
                                   double gain, const EvenPolynomial& P) {
  require_spectrum(f, "regularity_report");
  require_spectrum(u, "regularity_report");
  if (!same_grid_layout(*f.grid, *u.grid)) {
    throw InvalidArgument("regularity_report: spectra live on different grids");
  }
  const std::vector<double> t = squared_radii(*f.grid);
  const double t_max = *std::max_element(t.begin(), t.end());

  RegularityRecord rec;
  rec.source_norm = sobolev_norm(f, SobolevIndex(s, 2.0));
  rec.solution_norm = sobolev_norm(u, SobolevIndex(s + gain, 2.0));
  rec.ratio = rec.source_norm > 0.0
                  ? rec.solution_norm / rec.source_norm
                  : (rec.solution_norm > 0.0
                         ? std::numeric_limits<double>::infinity()
                         : 0.0);
  rec.bound = P.inverse_symbol_bound(gain, t_max);
  rec.pass = rec.ratio <= rec.bound + 1e-8;
  return rec;
}

}  // namespace pax
