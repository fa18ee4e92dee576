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

#include "transform.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "bessel.hpp"
#include "errors.hpp"
#include "summation.hpp"

namespace pax {

namespace {

void require_same_alpha(const QuadGrid& a, const QuadGrid& b) {
  if (a.alpha().values() != b.alpha().values()) {
    throw InvalidArgument("transform: grids must share the same alpha");
  }
}

void require_on_grid(const GridFunction& f, const GridPtr& grid) {
  if (!f.grid || !grid) throw InvalidArgument("transform: missing grid");
  if (f.values.size() != f.grid->size()) {
    throw InvalidArgument("transform: value count does not match grid");
  }
  if (f.grid == grid) return;
  // Structural equality is enough: same alpha, radii and node counts.
  if (f.grid->alpha().values() != grid->alpha().values() ||
      f.grid->dim() != grid->dim()) {
    throw InvalidArgument("transform: function lives on a different grid");
  }
  for (int i = 0; i < grid->dim(); ++i) {
    if (f.grid->axis(i).radius != grid->axis(i).radius ||
        f.grid->axis(i).nodes.size() != grid->axis(i).nodes.size()) {
      throw InvalidArgument("transform: function lives on a different grid");
    }
  }
}

// Contracts one tensor axis: out[o][k][i] = sum_j K[k][j] in[o][j][i].
void apply_axis(const std::vector<double>& in, std::size_t outer,
                std::size_t nj, std::size_t inner, const std::vector<double>& K,
                std::size_t nk, std::vector<double>& out) {
  out.assign(outer * nk * inner, 0.0);
  for (std::size_t o = 0; o < outer; ++o) {
    const double* in_block = in.data() + o * nj * inner;
    double* out_block = out.data() + o * nk * inner;
    for (std::size_t k = 0; k < nk; ++k) {
      const double* krow = K.data() + k * nj;
      double* orow = out_block + k * inner;
      for (std::size_t j = 0; j < nj; ++j) {
        const double kv = krow[j];
        const double* irow = in_block + j * inner;
        for (std::size_t i = 0; i < inner; ++i) {
          orow[i] += kv * irow[i];
        }
      }
    }
  }
}

}  // namespace

TransformPlan::TransformPlan(GridPtr from, GridPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (!from_ || !to_) throw InvalidArgument("transform: missing grid");
  require_same_alpha(*from_, *to_);
  const int n = from_->dim();
  kernels_.resize(static_cast<std::size_t>(n));
  for (int ax = 0; ax < n; ++ax) {
    const auto& src = from_->axis(ax);
    const auto& dst = to_->axis(ax);
    const double gamma = from_->alpha()[ax];
    const std::size_t nj = src.nodes.size();
    const std::size_t nk = dst.nodes.size();
    auto& K = kernels_[static_cast<std::size_t>(ax)];
    K.resize(nk * nj);
    for (std::size_t k = 0; k < nk; ++k) {
      for (std::size_t j = 0; j < nj; ++j) {
        K[k * nj + j] = normalized_bessel(gamma, dst.nodes[k] * src.nodes[j]) *
                        src.measure_weights[j];
      }
    }
  }
}

GridFunction TransformPlan::apply(const GridFunction& f) const {
  require_on_grid(f, from_);
  const int n = from_->dim();
  std::vector<double> cur = f.values;
  std::vector<double> next;
  // Shape morphs axis by axis from the physical extents to the target ones.
  std::vector<std::size_t> shape = from_->shape();
  for (int ax = 0; ax < n; ++ax) {
    const std::size_t nj = shape[static_cast<std::size_t>(ax)];
    const std::size_t nk = to_->shape()[static_cast<std::size_t>(ax)];
    std::size_t outer = 1, inner = 1;
    for (int b = 0; b < ax; ++b) outer *= shape[static_cast<std::size_t>(b)];
    for (int b = ax + 1; b < n; ++b) inner *= shape[static_cast<std::size_t>(b)];
    apply_axis(cur, outer, nj, inner, kernels_[static_cast<std::size_t>(ax)],
               nk, next);
    cur.swap(next);
    shape[static_cast<std::size_t>(ax)] = nk;
  }
  GridFunction out;
  out.grid = to_;
  out.values = std::move(cur);
  return out;
}

GridFunction forward_transform(const GridFunction& f, GridPtr freq_grid) {
  return TransformPlan(f.grid, std::move(freq_grid)).apply(f);
}

GridFunction inverse_transform(const GridFunction& F, GridPtr phys_grid) {
  const double c = F.grid->alpha().c_alpha();
  GridFunction out = TransformPlan(F.grid, std::move(phys_grid)).apply(F);
  for (double& v : out.values) v *= c * c;
  return out;
}

double plancherel_defect(const GridFunction& f, GridPtr freq_grid) {
  const double nf = lp_norm(f, 2.0);
  if (nf == 0.0) {
    throw InvalidArgument("plancherel_defect: zero function");
  }
  const GridFunction F = forward_transform(f, std::move(freq_grid));
  const double nF = f.grid->alpha().c_alpha() * lp_norm(F, 2.0);
  return std::fabs(nf - nF) / nf;
}

double inversion_defect(const GridFunction& f, GridPtr freq_grid) {
  const double nf = lp_norm(f, 2.0);
  if (nf == 0.0) {
    throw InvalidArgument("inversion_defect: zero function");
  }
  const GridFunction F = forward_transform(f, std::move(freq_grid));
  GridFunction back = inverse_transform(F, f.grid);
  for (std::size_t i = 0; i < back.values.size(); ++i) {
    back.values[i] -= f.values[i];
  }
  return lp_norm(back, 2.0) / nf;
}

double sup_bound_defect(const GridFunction& f, GridPtr freq_grid) {
  const double l1 = lp_norm(f, 1.0);
  const GridFunction F = forward_transform(f, std::move(freq_grid));
  double sup = 0.0;
  for (double v : F.values) sup = std::max(sup, std::fabs(v));
  return std::max(0.0, sup - l1);
}

GridFunction apply_multiplier(
    const GridFunction& F,
    const std::function<double(const std::vector<double>&)>& m) {
  if (!F.grid || F.values.size() != F.grid->size()) {
    throw InvalidArgument("apply_multiplier: malformed spectral samples");
  }
  GridFunction out;
  out.grid = F.grid;
  out.values.resize(F.values.size());
  std::vector<double> xi;
  for (std::size_t k = 0; k < F.values.size(); ++k) {
    F.grid->point(k, xi);
    const double mv = m(xi);
    if (!std::isfinite(mv)) {
      throw NumericError("apply_multiplier: non-finite multiplier value");
    }
    out.values[k] = mv * F.values[k];
  }
  return out;
}

double dual_pairing_defect(const GridFunction& f, const GridFunction& g) {
  require_on_grid(g, f.grid);
  // Both sides integrate over the same domain, so evaluate each spectrum
  // at the shared grid's own nodes.
  const TransformPlan plan(f.grid, f.grid);
  const GridFunction Ff = plan.apply(f);
  const GridFunction Fg = plan.apply(g);
  GridFunction lhs, rhs;
  lhs.grid = rhs.grid = f.grid;
  lhs.values.resize(f.values.size());
  rhs.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    lhs.values[i] = f.values[i] * Fg.values[i];
    rhs.values[i] = g.values[i] * Ff.values[i];
  }
  const double a = integrate(lhs);
  const double b = integrate(rhs);
  const double scale = std::max(std::fabs(a), std::fabs(b));
  if (scale == 0.0) return 0.0;
  return std::fabs(a - b) / scale;
}

GridFunction dirac_spectrum(const std::vector<double>& x, GridPtr freq_grid) {
  if (static_cast<int>(x.size()) != freq_grid->dim()) {
    throw InvalidArgument("dirac_spectrum: point dimension mismatch");
  }
  const std::vector<double>& alpha = freq_grid->alpha().values();
  return sample_on_grid(freq_grid, [&](const std::vector<double>& xi) {
    return bessel_kernel(alpha, x, xi);
  });
}

double laplacian_fd(const std::function<double(const std::vector<double>&)>& f,
                    const AlphaParams& alpha, const std::vector<double>& x,
                    double h) {
  if (static_cast<int>(x.size()) != alpha.dim()) {
    throw InvalidArgument("laplacian_fd: point dimension mismatch");
  }
  if (!(h > 0.0)) throw InvalidArgument("laplacian_fd: step must be positive");
  const double f0 = f(x);
  std::vector<double> p = x;
  double acc = 0.0;
  for (int i = 0; i < alpha.dim(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    p[ui] = x[ui] + h;
    const double fp = f(p);
    p[ui] = x[ui] - h;  // may cross zero; evaluators are even per axis
    const double fm = f(p);
    p[ui] = x[ui];
    const double second = (fp - 2.0 * f0 + fm) / (h * h);
    const double first = (fp - fm) / (2.0 * h);
    acc += second + (2.0 * alpha[i] + 1.0) / x[ui] * first;
  }
  return acc;
}

std::string spectral_samples_to_json(const GridFunction& F) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(grid_function_to_json(F));
  nlohmann::ordered_json tagged;
  tagged["domain"] = "frequency";
  for (auto& [key, value] : j.items()) tagged[key] = value;
  return tagged.dump();
}

}  // namespace pax
