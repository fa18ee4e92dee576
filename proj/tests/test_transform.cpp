#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "bessel.hpp"
#include "errors.hpp"
#include "function_spec.hpp"
#include "grid.hpp"
#include "transform.hpp"

using pax::AlphaParams;
using pax::FunctionSpec;
using pax::GridFunction;
using pax::TransformPlan;
using pax::apply_multiplier;
using pax::bessel_kernel;
using pax::build_grid;
using pax::dirac_spectrum;
using pax::dual_pairing_defect;
using pax::forward_transform;
using pax::inverse_transform;
using pax::inversion_defect;
using pax::laplacian_fd;
using pax::lp_norm;
using pax::plancherel_defect;
using pax::sample_spec;
using pax::sup_bound_defect;

namespace {

pax::GridPtr reference_grid_1d(double alpha, double R = 14.0, int N = 200) {
  return build_grid(AlphaParams({alpha}), {R}, {N});
}

double sq(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

TEST_CASE("gaussian spectrum matches the closed form on the half line") {
  const auto phys = reference_grid_1d(0.0);
  const auto freq = reference_grid_1d(0.0);
  const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
  const GridFunction F = forward_transform(f, freq);
  std::vector<double> xi;
  for (std::size_t k = 0; k < freq->size(); ++k) {
    freq->point(k, xi);
    if (xi[0] > 5.0) continue;
    const double expect = std::exp(-0.5 * xi[0] * xi[0]);
    INFO("lambda=", xi[0]);
    CHECK(F.values[k] == doctest::Approx(expect).epsilon(1e-8));
  }
}

TEST_CASE("zero transforms to zero") {
  const auto phys = reference_grid_1d(0.5, 10.0, 60);
  GridFunction z;
  z.grid = phys;
  z.values.assign(phys->size(), 0.0);
  const GridFunction F = forward_transform(z, phys);
  for (double v : F.values) CHECK(v == 0.0);
  const GridFunction back = inverse_transform(F, phys);
  for (double v : back.values) CHECK(v == 0.0);
}

TEST_CASE("two-axis gaussian spectrum factorizes with the right constant") {
  const AlphaParams alpha({0.5, 0.0});
  const auto phys = build_grid(alpha, {14.0, 14.0}, {120, 120});
  const auto freq = build_grid(alpha, {10.0, 10.0}, {100, 100});
  const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
  const GridFunction F = forward_transform(f, freq);
  const double c = std::sqrt(M_PI / 2.0);  // 2^{1/2} Gamma(3/2)
  std::vector<double> xi;
  for (std::size_t k = 0; k < freq->size(); k += 37) {
    freq->point(k, xi);
    if (sq(xi) > 25.0) continue;
    const double expect = c * std::exp(-0.5 * sq(xi));
    INFO("xi=(", xi[0], ",", xi[1], ")");
    CHECK(F.values[k] == doctest::Approx(expect).epsilon(1e-7));
  }
}

TEST_CASE("forward transform is linear") {
  const auto phys = reference_grid_1d(0.3, 12.0, 90);
  const auto freq = reference_grid_1d(0.3, 9.0, 70);
  const TransformPlan plan(phys, freq);
  const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
  const auto g = sample_spec(FunctionSpec::poly_gaussian({0.5, 1.0}, 2.0), phys);
  const double a = 1.75, b = -0.4;
  GridFunction mix;
  mix.grid = phys;
  mix.values.resize(phys->size());
  for (std::size_t i = 0; i < mix.values.size(); ++i) {
    mix.values[i] = a * f.values[i] + b * g.values[i];
  }
  const auto Fmix = plan.apply(mix);
  const auto Ff = plan.apply(f);
  const auto Fg = plan.apply(g);
  double scale = 0.0;
  for (double v : Fmix.values) scale = std::max(scale, std::fabs(v));
  for (std::size_t k = 0; k < Fmix.values.size(); ++k) {
    CHECK(std::fabs(Fmix.values[k] - (a * Ff.values[k] + b * Fg.values[k])) <=
          1e-13 * scale);
  }
}

TEST_CASE("round trip reproduces the function") {
  // Plain gaussian on the unweighted half line.
  {
    const auto phys = reference_grid_1d(0.0);
    const auto freq = reference_grid_1d(0.0);
    const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
    CHECK(inversion_defect(f, freq) <= 1e-6);
  }
  // x^2 gaussian against a weighted measure.
  {
    const auto phys = reference_grid_1d(1.0);
    const auto freq = reference_grid_1d(1.0);
    const auto f = sample_spec(FunctionSpec::poly_gaussian({0.0, 1.0}, 1.0), phys);
    CHECK(inversion_defect(f, freq) <= 1e-5);
  }
  // Fractional exponents, two axes.
  {
    const AlphaParams alpha({0.2, 0.7});
    const auto phys = build_grid(alpha, {13.0, 13.0}, {110, 110});
    const auto freq = build_grid(alpha, {13.0, 13.0}, {110, 110});
    const auto f = sample_spec(FunctionSpec::gaussian(1.5), phys);
    CHECK(inversion_defect(f, freq) <= 1e-6);
  }
}

TEST_CASE("norm is preserved up to the inversion constant") {
  {
    const auto phys = reference_grid_1d(0.0);
    const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
    CHECK(plancherel_defect(f, reference_grid_1d(0.0)) <= 1e-6);
  }
  {
    const AlphaParams alpha({0.5, 0.5});
    const auto phys = build_grid(alpha, {14.0, 14.0}, {120, 120});
    const auto freq = build_grid(alpha, {12.0, 12.0}, {120, 120});
    const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
    CHECK(plancherel_defect(f, freq) <= 1e-6);
  }
  {
    // Compactly supported bump: slow spectral decay needs a wide
    // frequency box before the two norms can agree.
    const auto phys = build_grid(AlphaParams({0.0}), {1.0}, {200});
    const auto freq = build_grid(AlphaParams({0.0}), {40.0}, {400});
    const auto f = sample_spec(FunctionSpec::bump(1.0, 4), phys);
    CHECK(plancherel_defect(f, freq) <= 1e-4);
  }
  // Zero function is rejected.
  {
    const auto phys = reference_grid_1d(0.0, 5.0, 16);
    GridFunction z;
    z.grid = phys;
    z.values.assign(phys->size(), 0.0);
    CHECK_THROWS_AS(plancherel_defect(z, phys), pax::InvalidArgument);
  }
}

TEST_CASE("spectra stay below the integrable-function sup bound") {
  const auto phys = reference_grid_1d(0.0);
  const auto freq = reference_grid_1d(0.0, 14.0, 220);
  const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
  const double l1 = lp_norm(f, 1.0);
  CHECK(sup_bound_defect(f, freq) <= 1e-10 * l1);

  const auto osc = pax::sample_on_grid(phys, [](const std::vector<double>& x) {
    return std::exp(-0.5 * x[0] * x[0]) * std::cos(5.0 * x[0]);
  });
  CHECK(sup_bound_defect(osc, freq) <= 1e-10 * lp_norm(osc, 1.0));

  GridFunction z;
  z.grid = phys;
  z.values.assign(phys->size(), 0.0);
  CHECK(sup_bound_defect(z, freq) == 0.0);
}

TEST_CASE("multipliers act pointwise") {
  const auto phys = reference_grid_1d(0.0, 10.0, 80);
  const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
  const GridFunction F = forward_transform(f, phys);
  const auto one = apply_multiplier(F, [](const std::vector<double>&) {
    return 1.0;
  });
  for (std::size_t k = 0; k < F.values.size(); ++k) {
    CHECK(one.values[k] == F.values[k]);
  }
  const double s = 0.0;
  const auto bessel_pot = apply_multiplier(F, [s](const std::vector<double>& xi) {
    return std::pow(1.0 + sq(xi), s);
  });
  for (std::size_t k = 0; k < F.values.size(); ++k) {
    CHECK(bessel_pot.values[k] == F.values[k]);
  }
  CHECK_THROWS_AS(apply_multiplier(F,
                                   [](const std::vector<double>& xi) {
                                     return 1.0 / (xi[0] - xi[0]);
                                   }),
                  pax::NumericError);
}

TEST_CASE("squared-frequency multiplier realizes the second-order operator") {
  // Applying |xi|^2 in frequency and returning must reproduce the closed
  // form (2 - x^2) e^{-x^2/2} of the negated operator on the half line.
  const auto phys = reference_grid_1d(0.0);
  const auto freq = reference_grid_1d(0.0);
  const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
  const GridFunction F = forward_transform(f, freq);
  const auto mF = apply_multiplier(
      F, [](const std::vector<double>& xi) { return sq(xi); });
  const GridFunction g = inverse_transform(mF, phys);
  std::vector<double> x;
  for (std::size_t k = 0; k < phys->size(); ++k) {
    phys->point(k, x);
    if (x[0] > 6.0) continue;
    const double expect = (2.0 - x[0] * x[0]) * std::exp(-0.5 * x[0] * x[0]);
    INFO("x=", x[0]);
    CHECK(std::fabs(g.values[k] - expect) <= 1e-6);
  }
}

TEST_CASE("centered differences confirm the frequency eigenrelation") {
  // || forward(L f) + |xi|^2 forward(f) ||_2 small relative to ||forward(f)||_2,
  // with the operator applied by finite differences on the samples.
  struct Case {
    std::vector<double> alpha;
    double R;
    int N;
  };
  for (const Case& c : {Case{{0.3}, 14.0, 180}, Case{{0.0, 1.0}, 12.0, 90}}) {
    const AlphaParams alpha(c.alpha);
    const auto n = static_cast<std::size_t>(alpha.dim());
    const auto phys = build_grid(alpha, std::vector<double>(n, c.R),
                                 std::vector<int>(n, c.N));
    const auto freq = build_grid(alpha, std::vector<double>(n, 8.0),
                                 std::vector<int>(n, c.N / 2));
    const FunctionSpec spec = FunctionSpec::gaussian(1.0);
    const auto f = sample_spec(spec, phys);
    const auto Lf = pax::sample_on_grid(phys, [&](const std::vector<double>& x) {
      return laplacian_fd(
          [&spec](const std::vector<double>& p) { return spec.evaluate(p); },
          alpha, x, 1e-3);
    });
    const TransformPlan plan(phys, freq);
    const auto Ff = plan.apply(f);
    const auto FLf = plan.apply(Lf);
    GridFunction defect;
    defect.grid = freq;
    defect.values.resize(freq->size());
    std::vector<double> xi;
    for (std::size_t k = 0; k < freq->size(); ++k) {
      freq->point(k, xi);
      defect.values[k] = FLf.values[k] + sq(xi) * Ff.values[k];
    }
    INFO("dim=", n);
    CHECK(lp_norm(defect, 2.0) <= 1e-4 * lp_norm(Ff, 2.0));
  }
}

TEST_CASE("pairing under the transform is symmetric") {
  const auto phys = reference_grid_1d(0.0);
  const auto f = sample_spec(FunctionSpec::gaussian(1.0), phys);
  const auto g = sample_spec(FunctionSpec::poly_gaussian({0.0, 1.0}, 1.0), phys);
  CHECK(dual_pairing_defect(f, f) == 0.0);
  CHECK(dual_pairing_defect(f, g) <= 1e-8);

  const auto bump_grid = build_grid(AlphaParams({0.0}), {14.0}, {220});
  const auto b = sample_spec(FunctionSpec::bump(1.0, 6), bump_grid);
  const auto g2 = sample_spec(FunctionSpec::gaussian(1.0), bump_grid);
  CHECK(dual_pairing_defect(b, g2) <= 1e-6);
}

TEST_CASE("point-mass spectra are the product kernel") {
  const auto freq = build_grid(AlphaParams({0.3, 1.0}), {6.0, 6.0}, {24, 24});
  const std::vector<double> x = {1.0, 0.5};
  const GridFunction D = dirac_spectrum(x, freq);
  std::vector<double> xi;
  for (std::size_t k = 0; k < freq->size(); k += 17) {
    freq->point(k, xi);
    CHECK(D.values[k] ==
          bessel_kernel(freq->alpha().values(), x, xi));
    CHECK(std::fabs(D.values[k]) <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(dirac_spectrum({1.0}, freq), pax::InvalidArgument);
}

TEST_CASE("mismatched grids are rejected") {
  const auto a = reference_grid_1d(0.0, 10.0, 40);
  const auto b = build_grid(AlphaParams({1.0}), {10.0}, {40});
  const auto f = sample_spec(FunctionSpec::gaussian(1.0), a);
  CHECK_THROWS_AS(forward_transform(f, b), pax::InvalidArgument);
  const auto c = build_grid(AlphaParams({0.0}), {10.0}, {32});
  const auto g = sample_spec(FunctionSpec::gaussian(2.0), c);
  CHECK_THROWS_AS(dual_pairing_defect(f, g), pax::InvalidArgument);
}

TEST_CASE("transform output is deterministic") {
  const auto phys = reference_grid_1d(0.2, 12.0, 100);
  const auto freq = reference_grid_1d(0.2, 10.0, 90);
  const auto f = sample_spec(FunctionSpec::poly_gaussian({1.0, -0.3}, 1.0), phys);
  const GridFunction F1 = forward_transform(f, freq);
  const GridFunction F2 = forward_transform(f, freq);
  for (std::size_t k = 0; k < F1.values.size(); ++k) {
    CHECK(F1.values[k] == F2.values[k]);
  }
  // Spectral snapshots carry the domain tag and parse back.
  const std::string text = pax::spectral_samples_to_json(F1);
  CHECK(text.find("\"domain\":\"frequency\"") != std::string::npos);
  const GridFunction back = pax::grid_function_from_json(text);
  CHECK(back.values == F1.values);
}
