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

#include <functional>
#include <string>
#include <vector>

#include "grid.hpp"

namespace pax {

// Discrete transform between two grids sharing the same exponent family:
//   F(lambda_k) = sum_j w_j f(x_j) prod_i j_{alpha_i}(lambda_{k,i} x_{j,i}).
// The kernel factorizes over axes, so the plan stores one dense matrix per
// axis (frequency-node x physical-node, with that axis's measure weight
// absorbed) and applies them in sequence: cost O(n * N^{n+1}) instead of
// O(N^{2n}). Matrices are built once at construction; reuse the plan when
// transforming many functions between the same pair of grids.
class TransformPlan {
public:
  TransformPlan(GridPtr from, GridPtr to);

  GridPtr from() const { return from_; }
  GridPtr to() const { return to_; }

  // Applies the quadrature transform to samples living on from().
  GridFunction apply(const GridFunction& f) const;

private:
  GridPtr from_;
  GridPtr to_;
  std::vector<std::vector<double>> kernels_;  // per axis, row-major to x from
};

// One-shot forward transform (builds a throwaway plan).
GridFunction forward_transform(const GridFunction& f, GridPtr freq_grid);

// Inverse transform: c_alpha^2 times the forward machinery applied to the
// spectral samples, landing on the physical grid.
GridFunction inverse_transform(const GridFunction& F, GridPtr phys_grid);

// | ||f||_2 - c_alpha ||F f||_2 | / ||f||_2. Throws if ||f||_2 = 0.
double plancherel_defect(const GridFunction& f, GridPtr freq_grid);

// || inverse(forward(f)) - f ||_2 / ||f||_2. Throws if ||f||_2 = 0.
double inversion_defect(const GridFunction& f, GridPtr freq_grid);

// max(0, ||F f||_inf - ||f||_1): how far the spectrum pokes above the
// integrable-function sup bound (which it never should, beyond rounding).
double sup_bound_defect(const GridFunction& f, GridPtr freq_grid);

// Pointwise product m(xi_k) * F(xi_k). Throws NumericError if the
// multiplier is non-finite at any node.
GridFunction apply_multiplier(
    const GridFunction& F,
    const std::function<double(const std::vector<double>&)>& m);

// | integral f * (F g) d mu  -  integral g * (F f) d mu |, relative to the
// larger magnitude (0 if both vanish). f and g share a physical grid; both
// spectra are evaluated at that grid's own nodes, since both sides integrate
// over the same domain.
double dual_pairing_defect(const GridFunction& f, const GridFunction& g);

// Spectrum of the point mass at x: xi -> prod_i j_{alpha_i}(x_i xi_i),
// sampled on the frequency grid.
GridFunction dirac_spectrum(const std::vector<double>& x, GridPtr freq_grid);

// Second-order operator sum_i [ d^2/dx_i^2 + (2 alpha_i + 1)/x_i d/dx_i ]
// applied by centered differences with step h; f must extend evenly
// across each axis (all built-in test functions do).
double laplacian_fd(const std::function<double(const std::vector<double>&)>& f,
                    const AlphaParams& alpha, const std::vector<double>& x,
                    double h);

// Same JSON snapshot as a physical sample, plus "domain": "frequency".
std::string spectral_samples_to_json(const GridFunction& F);

}  // namespace pax
