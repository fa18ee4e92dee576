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

#include "grid.hpp"

namespace pax {

// Polynomial P(t) = sum_j coeffs[j] t^j in t = |xi|^2 — an even polynomial
// of degree 2m in xi itself, used as a spectral symbol.
class EvenPolynomial {
public:
  explicit EvenPolynomial(std::vector<double> coeffs);

  double operator()(double t) const;
  // Degree m in t.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  // Verifies P(t) > 0 on a dense scan of [0, t_max] and that the leading
  // coefficient is positive (so positivity extends to t -> infinity).
  // Throws InvalidArgument otherwise.
  void require_positive(double t_max) const;

  // sup over t in [0, inf) of (1+t)^{gain} / P(t), evaluated on a dense scan
  // of [0, t_max] joined with the exact t -> infinity limit. Infinite when
  // gain exceeds the degree.
  double inverse_symbol_bound(double gain, double t_max) const;

private:
  std::vector<double> coeffs_;
};

// Spectral solve of (k^2 - Delta) u = f: divides the spectrum by k^2 + t.
// k must be nonzero (the symbol would vanish at the origin otherwise).
SpectralDistribution solve_helmholtz(const SpectralDistribution& f, double k);

// Spectral solve of P(-Delta) u = f for a strictly positive symbol:
// divides the spectrum by P(t). Positivity is checked over the grid's
// t-range and at infinity before any division happens.
SpectralDistribution solve_polynomial(const SpectralDistribution& f,
                                      const EvenPolynomial& P);

// One row of the regularity ledger for a solve: how much smoothness the
// solution gained and how that compares with the scalar symbol bound.
struct RegularityRecord {
  double source_norm = 0.0;    // ||f||_{H^s}
  double solution_norm = 0.0;  // ||u||_{H^{s+gain}}
  double ratio = 0.0;          // solution_norm / source_norm
  double bound = 0.0;          // sup_t (1+t)^{gain} / P(t)
  bool pass = false;           // ratio <= bound + 1e-8
};

RegularityRecord regularity_report(const SpectralDistribution& f,
                                   const SpectralDistribution& u, double s,
                                   double gain, const EvenPolynomial& P);

}  // namespace pax
