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

#include "function_spec.hpp"
#include "grid.hpp"

namespace pax {

// Smoothness/integrability index pair for the weighted spectral norms below.
//
// NOTE ON THE CONVENTION: the spectral weight is (1 + |xi|^2)^s with the
// exponent s itself, NOT s/2. The space H^s produced by these norms
// therefore coincides with the classical Sobolev space of order 2s. Every
// function in this module follows that convention.
struct SobolevIndex {
  double s = 0.0;
  double p = 2.0;
  SobolevIndex(double order, double integrability);
};

// c_alpha * || (1+|xi|^2)^s F ||_{L^p(mu)} for a spectrum F sampled on a
// frequency grid. Throws NumericError when the weight overflows (large s on
// a wide frequency box).
double sobolev_norm(const SpectralDistribution& T, const SobolevIndex& idx);

// c_alpha^2 * integral (1+|xi|^2)^{2s} F(S) F(T) dmu. Samples are real, so
// the Hermitian form reduces to a symmetric bilinear one. Both spectra must
// share a grid layout. hs_inner_product(T, T) equals sobolev_norm(T, {s,2})^2
// up to rounding.
double hs_inner_product(const SpectralDistribution& S,
                        const SpectralDistribution& T, double s);

// Whether the point mass at the origin lies in E^{s,p} for the given
// exponents: true iff 2sp + (2-p)(|alpha| + n/2) < -n strictly.
bool dirac_membership(double s, double p, const AlphaParams& alpha);

// Spectral power of the (negative) weighted Laplacian: multiplies the
// spectrum by |xi|^{2k}. k = 0 returns the input unchanged.
SpectralDistribution laplacian_power(const SpectralDistribution& T, int k);

struct BoundPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

// Multiplication bound: lhs = ||phi * T||_{E^{s,p}} with the product formed
// in physical space on phys_grid; rhs = 2^{|s|} c_alpha ||T||_{E^{s,p}} *
// ||(1+|x|^2)^{|s|} F(phi)||_{L^1}. The |s| exponent on the phi factor is
// what the Peetre-type estimate actually supports for negative s.
BoundPair schwartz_multiply_bound(const FunctionSpec& phi,
                                  const SpectralDistribution& T,
                                  GridPtr phys_grid, const SobolevIndex& idx);

struct PairingResult {
  double pairing = 0.0;
  double bound = 0.0;
};

// Duality pairing <T, phi> = c_alpha^2 integral F(T) F(phi) dmu against the
// Cauchy-Schwarz bound ||phi||_{H^s} ||T||_{H^{-s}}. Always |pairing| <=
// bound up to rounding; equality iff F(T) is proportional to
// (1+|xi|^2)^{2s} F(phi).
PairingResult duality_pairing(const SpectralDistribution& T,
                              const SpectralDistribution& phi_spectrum,
                              double s);

// Spectrum of (1 - Delta)^m g for a physical sample g: F(T) =
// (1+|xi|^2)^m F(g). The H^{-m} norm of the result equals ||g||_{L^2(mu)}
// up to quadrature error.
SpectralDistribution negative_order_representation(const SampledFunction& g,
                                                   GridPtr freq_grid, int m);

// c_alpha * (integral |xi|^{4s} |F(T)|^2 dmu)^{1/2}, s >= 0. At s = 0 this
// is the spectral L^2 norm (equivalently ||T||_{L^2} by Plancherel).
double homogeneous_seminorm(const SpectralDistribution& T, double s);

// Continuity proxy: true iff s > (|alpha| + n)/2 + m AND, for every k <= m,
// the integral of |xi|^{2k} |F(f)| dmu is finite and moves by less than 5%
// when both the frequency radius and all node counts are doubled. The
// integrals are recomputed from the function spec so the refinement is a
// genuine re-discretization, not a re-reading of fixed samples.
bool continuity_embedding_check(const FunctionSpec& f, GridPtr phys_grid,
                                GridPtr freq_grid, double s, int m);

struct PoincareOptions {
  int profile_power = 8;    // bump profile exponent
  int phys_nodes = 160;     // per-axis nodes over the bump support
  int freq_nodes = 240;     // per-axis frequency nodes
  double freq_radius = 0.0; // 0 = automatic: 14 / min(eps)
  // Max admissible fraction of the weighted spectral mass in the outer 20%
  // of the box. Bump spectra decay algebraically, so under high-order
  // weights a few percent legitimately sits out there; the default only
  // catches boxes that are grossly too small for the dilation.
  double tail_tolerance = 0.08;
};

// Least-squares slope of log(||T_eps||_{H^t} / ||T_eps||_{H^s}) against
// log(eps) for a fixed bump profile dilated to support (0, eps)^n. For the
// dilation family the slope approaches 2(s - t). Requires 0 <= t <= s and
// every eps in (0, 1], strictly decreasing; returns 0 when s = t. Throws
// NumericError when the frequency box visibly truncates a dilated spectrum
// (tail mass above tail_tolerance).
double poincare_slope(const AlphaParams& alpha, double s, double t,
                      const std::vector<double>& eps_list,
                      const PoincareOptions& opt = {});

// Elliptic regularity proxy: with u := P(-Delta) g for an even polynomial
// P(t) = sum_j c_j t^j (t = |xi|^2) that is strictly positive on [0, inf),
// checks that ||u||_{E^{s,2}} is finite, that ||g||_{E^{s+m,2}} (m = deg P)
// is finite and refinement-stable within 5%, and that
//   ||g||_{E^{s+m,2}} <= sup_t (1+t)^m / P(t) * ||u||_{E^{s,2}} + 1e-8.
// Returns true when all three hold. Throws InvalidArgument for a polynomial
// that is not strictly positive or has a nonpositive leading coefficient.
bool polynomial_regularity_check(const FunctionSpec& g, GridPtr phys_grid,
                                 GridPtr freq_grid,
                                 const std::vector<double>& P, double s);

}  // namespace pax
