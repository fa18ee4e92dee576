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
#include <memory>
#include <string>
#include <vector>

namespace pax {

// The per-axis exponent family: the measure on the positive orthant is
// d mu(x) = prod_i x_i^{2 alpha_i + 1} dx_i with every alpha_i > -1/2.
class AlphaParams {
public:
  AlphaParams() = default;
  explicit AlphaParams(std::vector<double> alpha);

  int dim() const { return static_cast<int>(alpha_.size()); }
  const std::vector<double>& values() const { return alpha_; }
  double operator[](int i) const { return alpha_[static_cast<std::size_t>(i)]; }

  // |alpha| = sum_i alpha_i.
  double abs_alpha() const;
  // Inversion/Plancherel constant c = 2^{-|alpha|} / prod Gamma(alpha_i+1);
  // equals 1 when every alpha_i = 0.
  double c_alpha() const;
  // Translation normalization prod_i Gamma(alpha_i+1)/(sqrt(pi) Gamma(alpha_i+1/2)).
  double c_prime_alpha() const;

private:
  std::vector<double> alpha_;
};

// One axis of a tensor-product rule on (0, R): Gauss-Jacobi nodes and
// weights absorbing the factor x^{2 alpha + 1} exactly.
// measure_weights[i] = base_weights[i] * nodes[i]^{2 alpha + 1}.
struct GridAxis {
  double radius = 0.0;
  std::vector<double> nodes;
  std::vector<double> base_weights;
  std::vector<double> measure_weights;
};

// Immutable tensor-product quadrature grid over a truncated box of the
// positive orthant. Flattened storage is row-major with axis 0 slowest.
class QuadGrid {
public:
  QuadGrid(AlphaParams alpha, const std::vector<double>& radius,
           const std::vector<int>& nodes_per_axis);

  const AlphaParams& alpha() const { return alpha_; }
  int dim() const { return alpha_.dim(); }
  const GridAxis& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return total_; }

  // Coordinates of the flattened node `flat` (out must have dim() entries).
  void point(std::size_t flat, std::vector<double>& out) const;
  // Product of per-axis measure weights at the flattened node.
  double measure_weight(std::size_t flat) const;

private:
  AlphaParams alpha_;
  std::vector<GridAxis> axes_;
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
};

using GridPtr = std::shared_ptr<const QuadGrid>;

GridPtr build_grid(const AlphaParams& alpha, const std::vector<double>& radius,
                   const std::vector<int>& nodes_per_axis);

// A function sampled on a grid: one real value per flattened node. The same
// representation serves physical-side samples and frequency-side spectra
// (transforms of real even data are real, so the whole pipeline is real).
struct GridFunction {
  GridPtr grid;
  std::vector<double> values;
};

using SampledFunction = GridFunction;
using SpectralDistribution = GridFunction;

// Samples a pointwise evaluator over all grid nodes.
GridFunction sample_on_grid(
    GridPtr grid, const std::function<double(const std::vector<double>&)>& f);

// Weighted integral sum_k w_k f_k, reduced with a deterministic
// balanced pairwise tree. All values must be finite.
double integrate(const GridFunction& f);

// (integral of |f|^p d mu)^{1/p}; p = infinity gives max |f| (the discrete
// essential sup). Requires p >= 1. Throws NumericError on overflow.
double lp_norm(const GridFunction& f, double p);

// True when two grids have identical exponents, radii, and node counts —
// samples on one can be consumed by anything built for the other.
bool same_grid_layout(const QuadGrid& a, const QuadGrid& b);

// |x|^2 at every flattened node, in node order.
std::vector<double> squared_radii(const QuadGrid& grid);

// JSON snapshot {alpha, radius, nodes_per_axis, values} and its inverse.
// Values round-trip exactly (shortest-representation doubles).
std::string grid_function_to_json(const GridFunction& f);
GridFunction grid_function_from_json(const std::string& text);

}  // namespace pax
