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

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace pax {
namespace {

// Implicit-shift QL diagonalization of a symmetric tridiagonal matrix,
// rotating a companion vector z with the eigenvectors. On return d holds the
// eigenvalues (unsorted) and z[i] the first component of the i-th normalized
// eigenvector scaled by the initial z. d has size n, e has size n with
// e[0..n-2] the off-diagonal entries.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                    std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e[n - 1] = 0.0;
  const double prec = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      while (m < n - 1 &&
             std::fabs(e[m]) > prec * (std::fabs(d[m]) + std::fabs(d[m + 1]))) {
        ++m;
      }
      if (m == l) break;
      if (++iter > 60) {
        throw NumericError("gauss_jacobi: QL iteration did not converge");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double bb = c * e[i];
        if (std::fabs(g) <= std::fabs(f)) {
          c = g / f;
          r = std::hypot(c, 1.0);
          e[i + 1] = f * r;
          s = 1.0 / r;
          c *= s;
        } else {
          s = f / g;
          r = std::hypot(s, 1.0);
          e[i + 1] = g * r;
          c = 1.0 / r;
          s *= c;
        }
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * bb;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - bb;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace

QuadRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) {
    throw InvalidArgument("gauss_jacobi: need at least one node, got " +
                          std::to_string(n));
  }
  if (!(a > -1.0) || !(b > -1.0)) {
    throw InvalidArgument("gauss_jacobi: weight exponents must be > -1");
  }
  const double ab = a + b;
  std::vector<double> d(n), e(n, 0.0);

  d[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double tk = 2.0 * k + ab;
    d[k] = (b * b - a * a) / (tk * (tk + 2.0));
  }
  // Off-diagonals: e[k] couples rows k and k+1 and equals sqrt(beta_{k+1})
  // of the orthonormal recurrence. The k = 0 entry has its own closed form;
  // the general one would hit 0/0 at a + b = -1.
  if (n > 1) {
    e[0] = std::sqrt(4.0 * (a + 1.0) * (b + 1.0) /
                     ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
  }
  for (int k = 2; k < n; ++k) {
    const double tk = 2.0 * k + ab;
    const double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    const double den = tk * tk * (tk + 1.0) * (tk - 1.0);
    e[k - 1] = std::sqrt(num / den);
  }

  // Total mass of the weight: mu0 = 2^{a+b+1} B(a+1, b+1).
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                         std::lgamma(b + 1.0) - std::lgamma(ab + 2.0);
  const double mu0 = std::exp(log_mu0);

  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tridiagonal_ql(d, e, z);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return d[i] < d[j]; });

  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = d[order[i]];
    rule.weights[i] = mu0 * z[order[i]] * z[order[i]];
  }
  return rule;
}

QuadRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace pax
