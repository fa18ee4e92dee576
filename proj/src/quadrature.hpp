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

// An n-point quadrature rule on (-1, 1).
struct QuadRule {
  std::vector<double> nodes;    // strictly increasing, inside (-1, 1)
  std::vector<double> weights;  // positive
};

// Gauss-Jacobi rule for the weight (1-t)^a (1+t)^b on (-1, 1): integrates
// polynomials of degree <= 2n-1 against that weight exactly. Computed by the
// Golub-Welsch method: the symmetric tridiagonal Jacobi matrix of the
// orthonormal recurrence is diagonalized by an implicit-shift QL sweep that
// carries the weight vector along. Requires n >= 1, a > -1, b > -1.
QuadRule gauss_jacobi(int n, double a, double b);

// Gauss-Legendre rule (unit weight) on (-1, 1).
QuadRule gauss_legendre(int n);

}  // namespace pax
