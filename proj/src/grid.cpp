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

#include "grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"

#include "errors.hpp"
#include "quadrature.hpp"
#include "summation.hpp"

namespace pax {

AlphaParams::AlphaParams(std::vector<double> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) {
    throw InvalidArgument("alpha: at least one axis is required");
  }
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (!std::isfinite(alpha_[i]) || alpha_[i] <= -0.5) {
      throw InvalidArgument("alpha[" + std::to_string(i) +
                            "] <= -1/2 (each exponent must exceed -1/2)");
    }
  }
}

double AlphaParams::abs_alpha() const {
  NeumaierAccumulator acc;
  for (double a : alpha_) acc.add(a);
  return acc.value();
}

double AlphaParams::c_alpha() const {
  double log_c = -abs_alpha() * std::log(2.0);
  for (double a : alpha_) log_c -= std::lgamma(a + 1.0);
  return std::exp(log_c);
}

double AlphaParams::c_prime_alpha() const {
  double log_c = 0.0;
  for (double a : alpha_) {
    log_c += std::lgamma(a + 1.0) - 0.5 * std::log(M_PI) - std::lgamma(a + 0.5);
  }
  return std::exp(log_c);
}

QuadGrid::QuadGrid(AlphaParams alpha, const std::vector<double>& radius,
                   const std::vector<int>& nodes_per_axis)
    : alpha_(std::move(alpha)) {
  const int n = alpha_.dim();
  if (static_cast<int>(radius.size()) != n ||
      static_cast<int>(nodes_per_axis.size()) != n) {
    throw InvalidArgument(
        "build_grid: radius and nodes_per_axis must match alpha dimension");
  }
  axes_.resize(static_cast<std::size_t>(n));
  shape_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double R = radius[static_cast<std::size_t>(i)];
    const int N = nodes_per_axis[static_cast<std::size_t>(i)];
    if (!(R > 0.0) || !std::isfinite(R)) {
      throw InvalidArgument("grid.radius[" + std::to_string(i) +
                            "] must be positive and finite");
    }
    if (N < 2) {
      throw InvalidArgument("grid.nodes[" + std::to_string(i) +
                            "] must be >= 2");
    }
    const double a = alpha_[i];
    // Gauss-Jacobi with weight (1+t)^{2a+1} on (-1,1); the map
    // x = R(1+t)/2 turns it into the measure x^{2a+1} dx on (0, R).
    const QuadRule rule = gauss_jacobi(N, 0.0, 2.0 * a + 1.0);
    GridAxis& ax = axes_[static_cast<std::size_t>(i)];
    ax.radius = R;
    ax.nodes.resize(static_cast<std::size_t>(N));
    ax.base_weights.resize(static_cast<std::size_t>(N));
    ax.measure_weights.resize(static_cast<std::size_t>(N));
    const double scale = std::pow(0.5 * R, 2.0 * a + 2.0);
    for (int k = 0; k < N; ++k) {
      const double x = 0.5 * R * (1.0 + rule.nodes[static_cast<std::size_t>(k)]);
      const double w = scale * rule.weights[static_cast<std::size_t>(k)];
      ax.nodes[static_cast<std::size_t>(k)] = x;
      ax.measure_weights[static_cast<std::size_t>(k)] = w;
      ax.base_weights[static_cast<std::size_t>(k)] =
          w / std::pow(x, 2.0 * a + 1.0);
    }
    shape_[static_cast<std::size_t>(i)] = static_cast<std::size_t>(N);
  }
  strides_.assign(static_cast<std::size_t>(n), 1);
  total_ = 1;
  for (int i = n - 1; i >= 0; --i) {
    strides_[static_cast<std::size_t>(i)] = total_;
    total_ *= shape_[static_cast<std::size_t>(i)];
  }
}

void QuadGrid::point(std::size_t flat, std::vector<double>& out) const {
  out.resize(axes_.size());
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const std::size_t idx = (flat / strides_[i]) % shape_[i];
    out[i] = axes_[i].nodes[idx];
  }
}

double QuadGrid::measure_weight(std::size_t flat) const {
  double w = 1.0;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const std::size_t idx = (flat / strides_[i]) % shape_[i];
    w *= axes_[i].measure_weights[idx];
  }
  return w;
}

GridPtr build_grid(const AlphaParams& alpha, const std::vector<double>& radius,
                   const std::vector<int>& nodes_per_axis) {
  return std::make_shared<QuadGrid>(alpha, radius, nodes_per_axis);
}

GridFunction sample_on_grid(
    GridPtr grid, const std::function<double(const std::vector<double>&)>& f) {
  GridFunction out;
  out.grid = grid;
  out.values.resize(grid->size());
  std::vector<double> x;
  for (std::size_t k = 0; k < grid->size(); ++k) {
    grid->point(k, x);
    out.values[k] = f(x);
  }
  return out;
}

namespace {
void require_consistent(const GridFunction& f) {
  if (!f.grid) throw InvalidArgument("grid function: missing grid");
  if (f.values.size() != f.grid->size()) {
    throw InvalidArgument("grid function: value count does not match grid");
  }
}
}  // namespace

double integrate(const GridFunction& f) {
  require_consistent(f);
  std::vector<double> weighted(f.values.size());
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    if (!std::isfinite(f.values[k])) {
      throw NumericError("integrate: non-finite sample value");
    }
    weighted[k] = f.values[k] * f.grid->measure_weight(k);
  }
  return pairwise_sum(weighted);
}

double lp_norm(const GridFunction& f, double p) {
  require_consistent(f);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : f.values) {
      if (!std::isfinite(v)) throw NumericError("lp_norm: non-finite sample value");
      m = std::max(m, std::fabs(v));
    }
    return m;
  }
  if (!(p >= 1.0)) {
    throw InvalidArgument("lp_norm: p must satisfy p >= 1 (or be infinite)");
  }
  std::vector<double> weighted(f.values.size());
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    const double v = f.values[k];
    if (!std::isfinite(v)) throw NumericError("lp_norm: non-finite sample value");
    const double a = std::fabs(v);
    double t;
    if (p == 1.0) {
      t = a;
    } else if (p == 2.0) {
      t = a * a;
    } else {
      t = std::pow(a, p);
    }
    weighted[k] = t * f.grid->measure_weight(k);
  }
  const double s = pairwise_sum(weighted);
  if (!std::isfinite(s)) throw NumericError("lp_norm: sum overflowed");
  const double r = (p == 2.0) ? std::sqrt(s) : std::pow(s, 1.0 / p);
  if (!std::isfinite(r)) throw NumericError("lp_norm: result overflowed");
  return r;
}

std::vector<double> squared_radii(const QuadGrid& grid) {
  std::vector<double> t(grid.size());
  std::vector<double> x(static_cast<std::size_t>(grid.dim()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid.point(k, x);
    double acc = 0.0;
    for (double c : x) acc += c * c;
    t[k] = acc;
  }
  return t;
}

bool same_grid_layout(const QuadGrid& a, const QuadGrid& b) {
  if (a.alpha().values() != b.alpha().values()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (a.axis(i).radius != b.axis(i).radius ||
        a.axis(i).nodes.size() != b.axis(i).nodes.size()) {
      return false;
    }
  }
  return true;
}

std::string grid_function_to_json(const GridFunction& f) {
  require_consistent(f);
  nlohmann::ordered_json j;
  j["alpha"] = f.grid->alpha().values();
  std::vector<double> radius;
  std::vector<int> nodes;
  for (int i = 0; i < f.grid->dim(); ++i) {
    radius.push_back(f.grid->axis(i).radius);
    nodes.push_back(static_cast<int>(f.grid->axis(i).nodes.size()));
  }
  j["radius"] = radius;
  j["nodes_per_axis"] = nodes;
  j["values"] = f.values;
  return j.dump();
}

GridFunction grid_function_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const AlphaParams alpha(j.at("alpha").get<std::vector<double>>());
  const auto radius = j.at("radius").get<std::vector<double>>();
  const auto nodes = j.at("nodes_per_axis").get<std::vector<int>>();
  GridFunction f;
  f.grid = build_grid(alpha, radius, nodes);
  f.values = j.at("values").get<std::vector<double>>();
  if (f.values.size() != f.grid->size()) {
    throw InvalidArgument("grid function: value count does not match grid");
  }
  return f;
}

}  // namespace pax
