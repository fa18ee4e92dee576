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
#include <vector>

#include "grid.hpp"
#include "quadrature.hpp"

namespace pax {

using Evaluator = std::function<double(const std::vector<double>&)>;

// Angular quadrature for the generalized translation, one Gauss-Jacobi rule
// per axis in t = cos(theta) with weight (1 - t^2)^{alpha_i - 1/2}. This is
// the primary computational path: it has no endpoint singularity for any
// admissible exponent.
class ThetaRule {
public:
  ThetaRule(const AlphaParams& alpha, int nodes);

  const AlphaParams& alpha() const { return alpha_; }
  int nodes() const { return nodes_; }
  const QuadRule& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }

private:
  AlphaParams alpha_;
  int nodes_;
  std::vector<QuadRule> axes_;
};

// Generalized translation (T_y f)(x): the normalized angular average of
// f at X_i = sqrt(x_i^2 + y_i^2 - 2 x_i y_i cos(theta_i)). f must be
// evaluable on the product of the intervals [|x_i - y_i|, x_i + y_i].
double translate(const Evaluator& f, const ThetaRule& rule,
                 const std::vector<double>& y, const std::vector<double>& x);

// Samples y -> (T_x f)(y) over a grid. (The translation is symmetric in
// its two points, so this also reads as x -> (T_y f)(x).)
GridFunction translate_sample(const Evaluator& f, const std::vector<double>& x,
                              GridPtr grid, const ThetaRule& rule);

// Closed-form translation kernel: the density w(x, y, z) such that
// (T_y f)(x) = integral f(z) w(x,y,z) d mu(z). Product over axes of
//   c'_i 2^{1-2a} [ (z^2-(x-y)^2) ((x+y)^2-z^2) ]^{a-1/2} / (xyz)^{2a},
// supported on z in [|x-y|, x+y]; zero outside. Requires x_i, y_i > 0.
// Throws EndpointSingular when z sits exactly on a support endpoint of an
// axis with alpha_i < 1/2 (the density diverges there, integrably).
double translation_kernel(const AlphaParams& alpha,
                          const std::vector<double>& x,
                          const std::vector<double>& y,
                          const std::vector<double>& z);

// One axis of the kernel-side quadrature: nodes z_j inside the support
// interval and weights that absorb both the kernel density and the measure
// factor z^{2a+1}, so that sum_j w_j f(z_j) approximates the axis integral
// of f against w * d mu.
QuadRule kernel_axis_rule(double alpha, double x, double y, int nodes);

// | integral w(x,y,z) d mu(z) - 1 | via the per-axis quadrature above.
double kernel_mass_defect(const AlphaParams& alpha,
                          const std::vector<double>& x,
                          const std::vector<double>& y, int nodes);

// (T_y f)(x) through the explicit kernel instead of the angular form;
// validation path for the primary route.
double translate_via_kernel(const Evaluator& f, const AlphaParams& alpha,
                            const std::vector<double>& y,
                            const std::vector<double>& x, int nodes);

// Convolution (f * g)(x) = integral f(y) (T_x g)(y) d mu(y), evaluated at
// every node of out_grid. f is sampled (its grid supplies the y-rule);
// g must be evaluable wherever the translation needs it.
GridFunction convolve(const GridFunction& f, const Evaluator& g,
                      GridPtr out_grid, const ThetaRule& rule);

// Spectral route: the convolution's transform is the product of the two
// transforms, so convolve by multiplying spectra and inverting. Matches
// the direct route on integrable pairs and is the only tractable path in
// higher dimension.
GridFunction convolve_spectral(const GridFunction& f, const GridFunction& g,
                               GridPtr freq_grid, GridPtr out_grid);

// Relative L2 gap between the spectrum of the (directly computed)
// convolution and the product of the individual spectra. g enters twice:
// sampled (for its spectrum) and as an evaluator (for the translation
// inside the direct convolution).
double convolution_theorem_defect(const GridFunction& f,
                                  const GridFunction& g_sampled,
                                  const Evaluator& g, GridPtr freq_grid,
                                  const ThetaRule& rule);

class FunctionSpec;

// Relative L2 gap between the spectrum of the pointwise product f*g and
// c_alpha^2 times the convolution of the two spectra. Needs closed-form
// spectra, so both specs must have exact transforms.
double product_transform_defect(const FunctionSpec& f, const FunctionSpec& g,
                                GridPtr phys_grid, GridPtr freq_grid,
                                const ThetaRule& rule);

}  // namespace pax
