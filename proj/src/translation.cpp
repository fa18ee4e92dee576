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

#include "translation.hpp"

#include <cmath>

#include "errors.hpp"
#include "function_spec.hpp"
#include "summation.hpp"
#include "transform.hpp"

namespace pax {

namespace {

double c_prime_axis(double a) {
  return std::exp(std::lgamma(a + 1.0) - 0.5 * std::log(M_PI) -
                  std::lgamma(a + 0.5));
}

// sqrt(x^2 + y^2 - 2xy t) rewritten as (x-y)^2 + 2xy(1-t): both terms are
// nonnegative on the orthant, so the value never cancels catastrophically
// as t -> 1 with x near y.
double chord_length(double x, double y, double t) {
  const double d = x - y;
  return std::sqrt(d * d + 2.0 * x * y * (1.0 - t));
}

void require_dim(const AlphaParams& alpha, const std::vector<double>& v,
                 const char* what) {
  if (static_cast<int>(v.size()) != alpha.dim()) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch");
  }
}

void require_orthant(const std::vector<double>& v, const char* what) {
  for (double c : v) {
    if (!std::isfinite(c) || c < 0.0) {
      throw InvalidArgument(std::string(what) +
                            ": coordinates must be finite and nonnegative");
    }
  }
}

}  // namespace

ThetaRule::ThetaRule(const AlphaParams& alpha, int nodes)
    : alpha_(alpha), nodes_(nodes) {
  if (nodes < 1) throw InvalidArgument("theta rule: nodes must be >= 1");
  axes_.reserve(static_cast<std::size_t>(alpha_.dim()));
  for (int i = 0; i < alpha_.dim(); ++i) {
    axes_.push_back(gauss_jacobi(nodes, alpha_[i] - 0.5, alpha_[i] - 0.5));
  }
}

double translate(const Evaluator& f, const ThetaRule& rule,
                 const std::vector<double>& y, const std::vector<double>& x) {
  const AlphaParams& alpha = rule.alpha();
  require_dim(alpha, x, "translate x");
  require_dim(alpha, y, "translate y");
  require_orthant(x, "translate x");
  require_orthant(y, "translate y");
  const int n = alpha.dim();
  const auto un = static_cast<std::size_t>(n);
  const auto m = static_cast<std::size_t>(rule.nodes());

  // The normalization constant times the per-axis rule mass is 1, so the
  // weights below average rather than merely sum.
  double norm = 1.0;
  for (int i = 0; i < n; ++i) norm *= c_prime_axis(alpha[i]);

  std::vector<std::size_t> idx(un, 0);
  std::vector<double> X(un);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(std::pow(double(m), n)));
  for (;;) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto& ax = rule.axis(i);
      // Zero coordinate short-circuit: the chord length is constant in t.
      if (x[ui] == 0.0 || y[ui] == 0.0) {
        X[ui] = std::hypot(x[ui], y[ui]);
      } else {
        X[ui] = chord_length(x[ui], y[ui], ax.nodes[idx[ui]]);
      }
      w *= ax.weights[idx[ui]];
    }
    terms.push_back(w * f(X));
    int ax = n - 1;
    while (ax >= 0 && ++idx[static_cast<std::size_t>(ax)] == m) {
      idx[static_cast<std::size_t>(ax)] = 0;
      --ax;
    }
    if (ax < 0) break;
  }
  return norm * pairwise_sum(terms);
}

GridFunction translate_sample(const Evaluator& f, const std::vector<double>& x,
                              GridPtr grid, const ThetaRule& rule) {
  if (grid->alpha().values() != rule.alpha().values()) {
    throw InvalidArgument("translate_sample: grid and rule alpha differ");
  }
  return sample_on_grid(grid, [&](const std::vector<double>& y) {
    return translate(f, rule, x, y);
  });
}

double translation_kernel(const AlphaParams& alpha,
                          const std::vector<double>& x,
                          const std::vector<double>& y,
                          const std::vector<double>& z) {
  require_dim(alpha, x, "translation_kernel x");
  require_dim(alpha, y, "translation_kernel y");
  require_dim(alpha, z, "translation_kernel z");
  require_orthant(z, "translation_kernel z");
  double w = 1.0;
  for (int i = 0; i < alpha.dim(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const double a = alpha[i];
    const double xi = x[ui], yi = y[ui], zi = z[ui];
    if (xi <= 0.0 || yi <= 0.0) {
      throw InvalidArgument(
          "translation_kernel: base points must be strictly positive");
    }
    const double lo = std::fabs(xi - yi);
    const double hi = xi + yi;
    if (zi < lo || zi > hi) return 0.0;
    if ((zi == lo || zi == hi) && a < 0.5) {
      throw EndpointSingular(
          "translation_kernel: density diverges at a support endpoint for "
          "alpha < 1/2");
    }
    const double quartic = (zi * zi - lo * lo) * (hi * hi - zi * zi);
    w *= c_prime_axis(a) * std::pow(2.0, 1.0 - 2.0 * a) *
         std::pow(quartic, a - 0.5) / std::pow(xi * yi * zi, 2.0 * a);
  }
  return w;
}

QuadRule kernel_axis_rule(double alpha, double x, double y, int nodes) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw InvalidArgument("kernel rule: base points must be strictly positive");
  }
  const double a = std::fabs(x - y);
  const double b = x + y;
  const double cp = c_prime_axis(alpha) * std::pow(2.0, 1.0 - 2.0 * alpha);
  const double denom = std::pow(x * y, 2.0 * alpha);
  QuadRule out;
  out.nodes.resize(static_cast<std::size_t>(nodes));
  out.weights.resize(static_cast<std::size_t>(nodes));
  if (a > 0.0) {
    // z = m + h t maps the interval to (-1,1); the factors
    // (z-a)^{alpha-1/2}(b-z)^{alpha-1/2} become the Jacobi weight
    // (1-t^2)^{alpha-1/2} times h^{2 alpha - 1}, and the measure factor
    // z^{2 alpha + 1} combines with the kernel's z^{-2 alpha} into a
    // single smooth z.
    const QuadRule gj = gauss_jacobi(nodes, alpha - 0.5, alpha - 0.5);
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double pre = cp / denom * std::pow(h, 2.0 * alpha);
    for (int j = 0; j < nodes; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const double z = mid + h * gj.nodes[uj];
      out.nodes[uj] = z;
      out.weights[uj] = pre * gj.weights[uj] * z *
                        std::pow((z + a) * (b + z), alpha - 0.5);
    }
  } else {
    // Degenerate interval (x = y): the support starts at the origin and
    // the kernel contributes z^{2 alpha - 1} there, which joins the
    // measure's z^{2 alpha + 1} into the Jacobi exponent 2 alpha on the
    // left endpoint of z = b(1+t)/2.
    const QuadRule gj = gauss_jacobi(nodes, alpha - 0.5, 2.0 * alpha);
    const double half = 0.5 * b;
    // (b/2)^{2 alpha} from z^{2 alpha}, (b/2)^{alpha - 1/2} from (b-z),
    // and one (b/2) from dz.
    const double pre = cp / denom * std::pow(half, 3.0 * alpha + 0.5);
    for (int j = 0; j < nodes; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const double z = half * (1.0 + gj.nodes[uj]);
      out.nodes[uj] = z;
      out.weights[uj] = pre * gj.weights[uj] * std::pow(b + z, alpha - 0.5);
    }
  }
  return out;
}

double kernel_mass_defect(const AlphaParams& alpha,
                          const std::vector<double>& x,
                          const std::vector<double>& y, int nodes) {
  require_dim(alpha, x, "kernel_mass_defect x");
  require_dim(alpha, y, "kernel_mass_defect y");
  double mass = 1.0;
  for (int i = 0; i < alpha.dim(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const QuadRule rule = kernel_axis_rule(alpha[i], x[ui], y[ui], nodes);
    NeumaierAccumulator acc;
    for (double w : rule.weights) acc.add(w);
    mass *= acc.value();
  }
  return std::fabs(mass - 1.0);
}

double translate_via_kernel(const Evaluator& f, const AlphaParams& alpha,
                            const std::vector<double>& y,
                            const std::vector<double>& x, int nodes) {
  require_dim(alpha, x, "translate_via_kernel x");
  require_dim(alpha, y, "translate_via_kernel y");
  const int n = alpha.dim();
  const auto un = static_cast<std::size_t>(n);
  std::vector<QuadRule> rules;
  rules.reserve(un);
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    rules.push_back(kernel_axis_rule(alpha[i], x[ui], y[ui], nodes));
  }
  std::vector<std::size_t> idx(un, 0);
  std::vector<double> z(un);
  std::vector<double> terms;
  const auto m = static_cast<std::size_t>(nodes);
  for (;;) {
    double w = 1.0;
    for (std::size_t i = 0; i < un; ++i) {
      z[i] = rules[i].nodes[idx[i]];
      w *= rules[i].weights[idx[i]];
    }
    terms.push_back(w * f(z));
    int ax = n - 1;
    while (ax >= 0 && ++idx[static_cast<std::size_t>(ax)] == m) {
      idx[static_cast<std::size_t>(ax)] = 0;
      --ax;
    }
    if (ax < 0) break;
  }
  return pairwise_sum(terms);
}

GridFunction convolve(const GridFunction& f, const Evaluator& g,
                      GridPtr out_grid, const ThetaRule& rule) {
  if (!f.grid || f.values.size() != f.grid->size()) {
    throw InvalidArgument("convolve: malformed sampled function");
  }
  if (f.grid->alpha().values() != out_grid->alpha().values() ||
      out_grid->alpha().values() != rule.alpha().values()) {
    throw InvalidArgument("convolve: alpha mismatch between grids and rule");
  }
  const std::size_t ny = f.grid->size();
  std::vector<double> ypts(ny * static_cast<std::size_t>(f.grid->dim()));
  std::vector<double> yw(ny);
  {
    std::vector<double> ybuf;
    for (std::size_t j = 0; j < ny; ++j) {
      f.grid->point(j, ybuf);
      for (std::size_t d = 0; d < ybuf.size(); ++d) {
        ypts[j * ybuf.size() + d] = ybuf[d];
      }
      yw[j] = f.grid->measure_weight(j);
    }
  }
  const auto dim = static_cast<std::size_t>(f.grid->dim());
  GridFunction out;
  out.grid = out_grid;
  out.values.resize(out_grid->size());
  std::vector<double> x;
  std::vector<double> ybuf(dim);
  std::vector<double> terms(ny);
  for (std::size_t k = 0; k < out_grid->size(); ++k) {
    out_grid->point(k, x);
    for (std::size_t j = 0; j < ny; ++j) {
      for (std::size_t d = 0; d < dim; ++d) ybuf[d] = ypts[j * dim + d];
      terms[j] = yw[j] * f.values[j] * translate(g, rule, x, ybuf);
    }
    out.values[k] = pairwise_sum(terms);
  }
  return out;
}

GridFunction convolve_spectral(const GridFunction& f, const GridFunction& g,
                               GridPtr freq_grid, GridPtr out_grid) {
  const TransformPlan plan(f.grid, freq_grid);
  GridFunction Ff = plan.apply(f);
  const GridFunction Fg = TransformPlan(g.grid, freq_grid).apply(g);
  for (std::size_t k = 0; k < Ff.values.size(); ++k) {
    Ff.values[k] *= Fg.values[k];
  }
  return inverse_transform(Ff, std::move(out_grid));
}

double convolution_theorem_defect(const GridFunction& f,
                                  const GridFunction& g_sampled,
                                  const Evaluator& g, GridPtr freq_grid,
                                  const ThetaRule& rule) {
  const GridFunction conv = convolve(f, g, f.grid, rule);
  const TransformPlan plan(f.grid, freq_grid);
  const GridFunction lhs = plan.apply(conv);
  const GridFunction Ff = plan.apply(f);
  const GridFunction Fg =
      TransformPlan(g_sampled.grid, freq_grid).apply(g_sampled);
  GridFunction diff, rhs;
  diff.grid = rhs.grid = freq_grid;
  diff.values.resize(lhs.values.size());
  rhs.values.resize(lhs.values.size());
  for (std::size_t k = 0; k < lhs.values.size(); ++k) {
    rhs.values[k] = Ff.values[k] * Fg.values[k];
    diff.values[k] = lhs.values[k] - rhs.values[k];
  }
  const double scale = lp_norm(rhs, 2.0);
  if (scale == 0.0) return lp_norm(lhs, 2.0);
  return lp_norm(diff, 2.0) / scale;
}

double product_transform_defect(const FunctionSpec& f, const FunctionSpec& g,
                                GridPtr phys_grid, GridPtr freq_grid,
                                const ThetaRule& rule) {
  if (!f.has_exact_transform() || !g.has_exact_transform()) {
    throw InvalidArgument(
        "product_transform_defect: both factors need closed-form spectra");
  }
  const AlphaParams& alpha = phys_grid->alpha();
  const GridFunction fg =
      sample_on_grid(phys_grid, [&](const std::vector<double>& x) {
        return f.evaluate(x) * g.evaluate(x);
      });
  const GridFunction lhs = forward_transform(fg, freq_grid);
  // Convolve the spectra over the frequency grid: the sampled factor is
  // F(f), the evaluable factor the closed form of F(g).
  const GridFunction Ff = sample_on_grid(freq_grid, [&](const std::vector<double>& xi) {
    return f.exact_transform(alpha, xi);
  });
  const GridFunction conv = convolve(
      Ff,
      [&](const std::vector<double>& xi) { return g.exact_transform(alpha, xi); },
      freq_grid, rule);
  const double c = alpha.c_alpha();
  GridFunction diff;
  diff.grid = freq_grid;
  diff.values.resize(lhs.values.size());
  for (std::size_t k = 0; k < lhs.values.size(); ++k) {
    diff.values[k] = lhs.values[k] - c * c * conv.values[k];
  }
  return lp_norm(diff, 2.0) / lp_norm(lhs, 2.0);
}

}  // namespace pax
