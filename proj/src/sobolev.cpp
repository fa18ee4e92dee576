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

#include "sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "errors.hpp"
#include "summation.hpp"
#include "transform.hpp"

namespace pax {

namespace {

void require_spectrum(const SpectralDistribution& T, const char* who) {
  if (!T.grid) throw InvalidArgument(std::string(who) + ": missing grid");
  if (T.values.size() != T.grid->size()) {
    throw InvalidArgument(std::string(who) +
                          ": value count does not match grid");
  }
}

// Rebuilds a grid with every radius scaled and every node count multiplied.
GridPtr scaled_grid(const QuadGrid& grid, double radius_factor,
                    int node_factor) {
  std::vector<double> radius(static_cast<std::size_t>(grid.dim()));
  std::vector<int> nodes(static_cast<std::size_t>(grid.dim()));
  for (int i = 0; i < grid.dim(); ++i) {
    radius[static_cast<std::size_t>(i)] = grid.axis(i).radius * radius_factor;
    nodes[static_cast<std::size_t>(i)] =
        static_cast<int>(grid.axis(i).nodes.size()) * node_factor;
  }
  return build_grid(grid.alpha(), radius, nodes);
}

// integral |xi|^{2k} |F| dmu via the deterministic pairwise tree.
double absolute_moment(const SpectralDistribution& F,
                       const std::vector<double>& t, int k) {
  std::vector<double> terms(F.values.size());
  for (std::size_t j = 0; j < F.values.size(); ++j) {
    terms[j] = F.grid->measure_weight(j) *
               std::pow(t[j], static_cast<double>(k)) * std::fabs(F.values[j]);
  }
  return pairwise_sum(terms);
}

double horner(const std::vector<double>& coeffs, double t) {
  double v = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 0;) v = v * t + coeffs[j];
  return v;
}

}  // namespace

SobolevIndex::SobolevIndex(double order, double integrability)
    : s(order), p(integrability) {
  if (!std::isfinite(s)) {
    throw InvalidArgument("index.s must be finite");
  }
  if (!std::isfinite(p) || p < 1.0) {
    throw InvalidArgument("index.p must lie in [1, inf)");
  }
}

double sobolev_norm(const SpectralDistribution& T, const SobolevIndex& idx) {
  require_spectrum(T, "sobolev_norm");
  const std::vector<double> t = squared_radii(*T.grid);
  GridFunction weighted;
  weighted.grid = T.grid;
  weighted.values.resize(T.values.size());
  for (std::size_t k = 0; k < T.values.size(); ++k) {
    const double v = std::pow(1.0 + t[k], idx.s) * T.values[k];
    if (!std::isfinite(v)) {
      throw NumericError("sobolev_norm: spectral weight overflowed");
    }
    weighted.values[k] = v;
  }
  return T.grid->alpha().c_alpha() * lp_norm(weighted, idx.p);
}

double hs_inner_product(const SpectralDistribution& S,
                        const SpectralDistribution& T, double s) {
  require_spectrum(S, "hs_inner_product");
  require_spectrum(T, "hs_inner_product");
  if (!same_grid_layout(*S.grid, *T.grid)) {
    throw InvalidArgument("hs_inner_product: spectra live on different grids");
  }
  const std::vector<double> t = squared_radii(*S.grid);
  std::vector<double> terms(S.values.size());
  for (std::size_t k = 0; k < S.values.size(); ++k) {
    terms[k] = S.grid->measure_weight(k) * std::pow(1.0 + t[k], 2.0 * s) *
               S.values[k] * T.values[k];
    if (!std::isfinite(terms[k])) {
      throw NumericError("hs_inner_product: term overflowed");
    }
  }
  const double c = S.grid->alpha().c_alpha();
  return c * c * pairwise_sum(terms);
}

bool dirac_membership(double s, double p, const AlphaParams& alpha) {
  if (!std::isfinite(s)) throw InvalidArgument("s must be finite");
  if (!std::isfinite(p) || p < 1.0) {
    throw InvalidArgument("p must lie in [1, inf)");
  }
  const double n = static_cast<double>(alpha.dim());
  const double lhs = 2.0 * s * p + (2.0 - p) * (alpha.abs_alpha() + n / 2.0);
  return lhs < -n;
}

SpectralDistribution laplacian_power(const SpectralDistribution& T, int k) {
  require_spectrum(T, "laplacian_power");
  if (k < 0) throw InvalidArgument("laplacian_power: k must be >= 0");
  if (k == 0) return T;
  return apply_multiplier(T, [k](const std::vector<double>& xi) {
    double t = 0.0;
    for (double c : xi) t += c * c;
    return std::pow(t, static_cast<double>(k));
  });
}

BoundPair schwartz_multiply_bound(const FunctionSpec& phi,
                                  const SpectralDistribution& T,
                                  GridPtr phys_grid, const SobolevIndex& idx) {
  require_spectrum(T, "schwartz_multiply_bound");
  if (!phys_grid) throw InvalidArgument("schwartz_multiply_bound: no grid");

  // Left side: form phi * T in physical space and measure its spectrum.
  const GridFunction t_phys = inverse_transform(T, phys_grid);
  GridFunction product;
  product.grid = phys_grid;
  product.values.resize(phys_grid->size());
  std::vector<double> x(static_cast<std::size_t>(phys_grid->dim()));
  for (std::size_t k = 0; k < phys_grid->size(); ++k) {
    phys_grid->point(k, x);
    product.values[k] = t_phys.values[k] * phi.evaluate(x);
  }
  const GridFunction product_spec = forward_transform(product, T.grid);
  BoundPair out;
  out.lhs = sobolev_norm(product_spec, idx);

  // Right side: 2^{|s|} c_alpha ||T||_{E^{s,p}} ||(1+|x|^2)^{|s|} F(phi)||_1.
  const GridFunction phi_spec =
      forward_transform(sample_spec(phi, phys_grid), T.grid);
  const std::vector<double> t = squared_radii(*T.grid);
  GridFunction weighted;
  weighted.grid = T.grid;
  weighted.values.resize(phi_spec.values.size());
  const double abs_s = std::fabs(idx.s);
  for (std::size_t k = 0; k < phi_spec.values.size(); ++k) {
    weighted.values[k] = std::pow(1.0 + t[k], abs_s) * phi_spec.values[k];
  }
  const double c = T.grid->alpha().c_alpha();
  out.rhs = std::pow(2.0, abs_s) * c * sobolev_norm(T, idx) *
            lp_norm(weighted, 1.0);
  return out;
}

PairingResult duality_pairing(const SpectralDistribution& T,
                              const SpectralDistribution& phi_spectrum,
                              double s) {
  require_spectrum(T, "duality_pairing");
  require_spectrum(phi_spectrum, "duality_pairing");
  if (!same_grid_layout(*T.grid, *phi_spectrum.grid)) {
    throw InvalidArgument("duality_pairing: spectra live on different grids");
  }
  std::vector<double> terms(T.values.size());
  for (std::size_t k = 0; k < T.values.size(); ++k) {
    terms[k] =
        T.grid->measure_weight(k) * T.values[k] * phi_spectrum.values[k];
  }
  const double c = T.grid->alpha().c_alpha();
  PairingResult out;
  out.pairing = c * c * pairwise_sum(terms);
  out.bound = sobolev_norm(phi_spectrum, SobolevIndex(s, 2.0)) *
              sobolev_norm(T, SobolevIndex(-s, 2.0));
  return out;
}

SpectralDistribution negative_order_representation(const SampledFunction& g,
                                                   GridPtr freq_grid, int m) {
  if (m < 0) {
    throw InvalidArgument("negative_order_representation: m must be >= 0");
  }
  const GridFunction spectrum = forward_transform(g, freq_grid);
  if (m == 0) return spectrum;
  return apply_multiplier(spectrum, [m](const std::vector<double>& xi) {
    double t = 0.0;
    for (double c : xi) t += c * c;
    return std::pow(1.0 + t, static_cast<double>(m));
  });
}

double homogeneous_seminorm(const SpectralDistribution& T, double s) {
  require_spectrum(T, "homogeneous_seminorm");
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw InvalidArgument("homogeneous_seminorm: s must be >= 0");
  }
  const std::vector<double> t = squared_radii(*T.grid);
  std::vector<double> terms(T.values.size());
  for (std::size_t k = 0; k < T.values.size(); ++k) {
    terms[k] = T.grid->measure_weight(k) * std::pow(t[k], 2.0 * s) *
               T.values[k] * T.values[k];
    if (!std::isfinite(terms[k])) {
      throw NumericError("homogeneous_seminorm: term overflowed");
    }
  }
  const double total = pairwise_sum(terms);
  return T.grid->alpha().c_alpha() * std::sqrt(std::max(total, 0.0));
}

bool continuity_embedding_check(const FunctionSpec& f, GridPtr phys_grid,
                                GridPtr freq_grid, double s, int m) {
  if (!phys_grid || !freq_grid) {
    throw InvalidArgument("continuity_embedding_check: missing grid");
  }
  if (m < 0) {
    throw InvalidArgument("continuity_embedding_check: m must be >= 0");
  }
  const AlphaParams& alpha = freq_grid->alpha();
  const double n = static_cast<double>(alpha.dim());
  if (!(s > 0.5 * (alpha.abs_alpha() + n) + static_cast<double>(m))) {
    return false;
  }

  const GridFunction coarse =
      forward_transform(sample_spec(f, phys_grid), freq_grid);
  // Refinement doubles the physical sampling density, the frequency radius,
  // and the frequency node count, then re-discretizes from scratch.
  const GridPtr phys_fine = scaled_grid(*phys_grid, 1.0, 2);
  const GridPtr freq_fine = scaled_grid(*freq_grid, 2.0, 2);
  const GridFunction fine =
      forward_transform(sample_spec(f, phys_fine), freq_fine);

  const std::vector<double> t_coarse = squared_radii(*freq_grid);
  const std::vector<double> t_fine = squared_radii(*freq_fine);
  for (int k = 0; k <= m; ++k) {
    const double coarse_val = absolute_moment(coarse, t_coarse, k);
    const double fine_val = absolute_moment(fine, t_fine, k);
    if (!std::isfinite(coarse_val) || !std::isfinite(fine_val)) return false;
    const double scale = std::max(std::fabs(coarse_val), std::fabs(fine_val));
    if (scale > 0.0 && std::fabs(fine_val - coarse_val) > 0.05 * scale) {
      return false;
    }
  }
  return true;
}

double poincare_slope(const AlphaParams& alpha, double s, double t,
                      const std::vector<double>& eps_list,
                      const PoincareOptions& opt) {
  if (!std::isfinite(s) || !std::isfinite(t) || t < 0.0 || t > s) {
    throw InvalidArgument("poincare_slope: requires 0 <= t <= s");
  }
  if (eps_list.empty()) {
    throw InvalidArgument("poincare_slope: eps_list must be nonempty");
  }
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const double e = eps_list[i];
    if (!std::isfinite(e) || e <= 0.0 || e > 1.0) {
      throw InvalidArgument("poincare_slope: every eps must lie in (0, 1]");
    }
    if (i > 0 && e >= eps_list[i - 1]) {
      throw InvalidArgument("poincare_slope: eps_list must strictly decrease");
    }
  }
  if (s == t) return 0.0;  // ratio of equal norms: constant 1
  if (eps_list.size() < 2) {
    throw InvalidArgument("poincare_slope: need at least two eps values");
  }

  const int n = alpha.dim();
  const double eps_min = eps_list.back();
  const double R =
      opt.freq_radius > 0.0 ? opt.freq_radius : 14.0 / eps_min;
  const GridPtr freq =
      build_grid(alpha, std::vector<double>(static_cast<std::size_t>(n), R),
                 std::vector<int>(static_cast<std::size_t>(n), opt.freq_nodes));
  const std::vector<double> t2 = squared_radii(*freq);

  std::vector<double> log_eps, log_ratio;
  std::vector<double> xi(static_cast<std::size_t>(n));
  for (double eps : eps_list) {
    const FunctionSpec profile = FunctionSpec::bump(eps, opt.profile_power);
    const GridPtr phys = build_grid(
        alpha, std::vector<double>(static_cast<std::size_t>(n), eps),
        std::vector<int>(static_cast<std::size_t>(n), opt.phys_nodes));
    const GridFunction F = forward_transform(sample_spec(profile, phys), freq);

    // The dilated spectrum spreads as eps shrinks; if a visible fraction of
    // the H^s mass sits against the outer edge of the box, the slope is
    // meaningless and the run must fail loudly rather than mislead.
    double total = 0.0, tail = 0.0;
    for (std::size_t k = 0; k < F.values.size(); ++k) {
      freq->point(k, xi);
      const double term = freq->measure_weight(k) *
                          std::pow(1.0 + t2[k], 2.0 * s) * F.values[k] *
                          F.values[k];
      total += term;
      bool outer = false;
      for (int i = 0; i < n; ++i) {
        if (xi[static_cast<std::size_t>(i)] > 0.8 * freq->axis(i).radius) {
          outer = true;
        }
      }
      if (outer) tail += term;
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
      throw NumericError("poincare_slope: degenerate spectral mass");
    }
    if (tail > opt.tail_tolerance * total) {
      throw NumericError(
          "poincare_slope: frequency box truncates the dilated spectrum; "
          "widen freq_radius or raise eps");
    }

    const double num = sobolev_norm(F, SobolevIndex(t, 2.0));
    const double den = sobolev_norm(F, SobolevIndex(s, 2.0));
    log_eps.push_back(std::log(eps));
    log_ratio.push_back(std::log(num / den));
  }

  double mean_x = 0.0, mean_y = 0.0;
  const double count = static_cast<double>(log_eps.size());
  for (std::size_t i = 0; i < log_eps.size(); ++i) {
    mean_x += log_eps[i];
    mean_y += log_ratio[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < log_eps.size(); ++i) {
    sxy += (log_eps[i] - mean_x) * (log_ratio[i] - mean_y);
    sxx += (log_eps[i] - mean_x) * (log_eps[i] - mean_x);
  }
  return sxy / sxx;
}

bool polynomial_regularity_check(const FunctionSpec& g, GridPtr phys_grid,
                                 GridPtr freq_grid,
                                 const std::vector<double>& P, double s) {
  if (!phys_grid || !freq_grid) {
    throw InvalidArgument("polynomial_regularity_check: missing grid");
  }
  if (P.empty()) {
    throw InvalidArgument("polynomial_regularity_check: empty polynomial");
  }
  if (!(P.back() > 0.0)) {
    throw InvalidArgument(
        "polynomial_regularity_check: leading coefficient must be positive");
  }
  const std::vector<double> t = squared_radii(*freq_grid);
  const double t_max = *std::max_element(t.begin(), t.end());
  for (int i = 0; i <= 512; ++i) {
    const double ti = t_max * static_cast<double>(i) / 512.0;
    if (!(horner(P, ti) > 0.0)) {
      throw InvalidArgument(
          "polynomial_regularity_check: P must be strictly positive on "
          "[0, inf)");
    }
  }
  const int m = static_cast<int>(P.size()) - 1;

  const GridFunction Fg =
      forward_transform(sample_spec(g, phys_grid), freq_grid);
  GridFunction Fu;
  Fu.grid = freq_grid;
  Fu.values.resize(Fg.values.size());
  for (std::size_t k = 0; k < Fg.values.size(); ++k) {
    Fu.values[k] = horner(P, t[k]) * Fg.values[k];
  }
  const double norm_u = sobolev_norm(Fu, SobolevIndex(s, 2.0));
  const double norm_g =
      sobolev_norm(Fg, SobolevIndex(s + static_cast<double>(m), 2.0));
  if (!std::isfinite(norm_u) || !std::isfinite(norm_g)) return false;

  // Refinement stability of the higher-order norm.
  const GridPtr phys_fine = scaled_grid(*phys_grid, 1.0, 2);
  const GridPtr freq_fine = scaled_grid(*freq_grid, 2.0, 2);
  const GridFunction Fg_fine =
      forward_transform(sample_spec(g, phys_fine), freq_fine);
  const double norm_g_fine =
      sobolev_norm(Fg_fine, SobolevIndex(s + static_cast<double>(m), 2.0));
  const double scale = std::max(norm_g, norm_g_fine);
  if (scale > 0.0 && std::fabs(norm_g_fine - norm_g) > 0.05 * scale) {
    return false;
  }

  // Multiplier bound: (1+t)^{s+m} F(g) = (1+t)^s [(1+t)^m / P(t)] F(u),
  // so the higher norm is controlled by the scalar sup of (1+t)^m / P(t).
  double sup_bound = 1.0 / P.back();  // the t -> infinity limit
  for (int i = 0; i <= 512; ++i) {
    const double ti = t_max * static_cast<double>(i) / 512.0;
    sup_bound = std::max(
        sup_bound, std::pow(1.0 + ti, static_cast<double>(m)) / horner(P, ti));
  }
  return norm_g <= sup_bound * norm_u + 1e-8;
}

}  // namespace pax
