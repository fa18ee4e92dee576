#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "function_spec.hpp"
#include "grid.hpp"
#include "pde.hpp"
#include "sobolev.hpp"
#include "transform.hpp"

using pax::AlphaParams;
using pax::EvenPolynomial;
using pax::FunctionSpec;
using pax::GridFunction;
using pax::GridPtr;
using pax::SobolevIndex;
using pax::SpectralDistribution;
using pax::apply_multiplier;
using pax::build_grid;
using pax::lp_norm;
using pax::regularity_report;
using pax::sobolev_norm;
using pax::solve_helmholtz;
using pax::solve_polynomial;

namespace {

const AlphaParams kAlpha0({0.0});

GridPtr freq_grid() { return build_grid(kAlpha0, {12.0}, {180}); }

SpectralDistribution gaussian_spectrum(GridPtr freq, double scale = 1.0) {
  const FunctionSpec g = FunctionSpec::gaussian(scale);
  SpectralDistribution F;
  F.grid = freq;
  F.values.resize(freq->size());
  std::vector<double> xi(static_cast<std::size_t>(freq->dim()));
  for (std::size_t k = 0; k < freq->size(); ++k) {
    freq->point(k, xi);
    F.values[k] = g.exact_transform(freq->alpha(), xi);
  }
  return F;
}

double rel_l2_diff(const GridFunction& a, const GridFunction& b) {
  GridFunction diff;
  diff.grid = a.grid;
  diff.values.resize(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    diff.values[k] = a.values[k] - b.values[k];
  }
  const double scale = lp_norm(b, 2.0);
  return scale > 0.0 ? lp_norm(diff, 2.0) / scale : lp_norm(diff, 2.0);
}

}  // namespace

TEST_CASE("polynomial symbol construction and positivity") {
  CHECK_THROWS_AS(EvenPolynomial({}), pax::InvalidArgument);
  CHECK_THROWS_AS(EvenPolynomial({1.0, std::nan("")}), pax::InvalidArgument);
  const EvenPolynomial P({4.0, 0.0, 1.0});
  CHECK(P(0.0) == 4.0);
  CHECK(P(2.0) == 8.0);
  CHECK(P.degree() == 2);
  CHECK_NOTHROW(P.require_positive(200.0));
  // Sign change inside the range, nonpositive leading term, zero at origin.
  CHECK_THROWS_AS(EvenPolynomial({-1.0, 1.0}).require_positive(10.0),
                  pax::InvalidArgument);
  CHECK_THROWS_AS(EvenPolynomial({1.0, -1.0}).require_positive(10.0),
                  pax::InvalidArgument);
  CHECK_THROWS_AS(EvenPolynomial({0.0, 1.0}).require_positive(10.0),
                  pax::InvalidArgument);
}

TEST_CASE("a constructed source inverts back to its seed") {
  const auto freq = freq_grid();
  const auto g = gaussian_spectrum(freq);
  const double k = 1.5;
  const auto f = apply_multiplier(g, [k](const std::vector<double>& xi) {
    return k * k + xi[0] * xi[0];
  });
  const auto u = solve_helmholtz(f, k);
  CHECK(rel_l2_diff(u, g) <= 1e-12);

  // Round trip the other way: applying the symbol to u reproduces f.
  const auto back = apply_multiplier(u, [k](const std::vector<double>& xi) {
    return k * k + xi[0] * xi[0];
  });
  CHECK(rel_l2_diff(back, f) <= 1e-12);
}

TEST_CASE("rejections and trivial sources") {
  const auto f = gaussian_spectrum(freq_grid());
  CHECK_THROWS_AS(solve_helmholtz(f, 0.0), pax::InvalidArgument);
  CHECK_THROWS_AS(solve_helmholtz(f, std::nan("")), pax::InvalidArgument);

  GridFunction z;
  z.grid = freq_grid();
  z.values.assign(z.grid->size(), 0.0);
  const auto u = solve_helmholtz(z, 1.0);
  for (double v : u.values) CHECK(v == 0.0);
}

TEST_CASE("solving costs nothing in the shifted norm at k = 1") {
  // With the symbol 1 + t the weight (1+t) u exactly reconstructs f, so
  // ||u||_{H^{s+1}} = ||f||_{H^s}; for a unit gaussian that value is the
  // plain L2 norm 1/sqrt(2).
  const auto f = gaussian_spectrum(freq_grid());
  const auto u = solve_helmholtz(f, 1.0);
  const double shifted = sobolev_norm(u, SobolevIndex(1.0, 2.0));
  CHECK(shifted == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(shifted <=
        sobolev_norm(f, SobolevIndex(0.0, 2.0)) * (1.0 + 1e-12));
}

TEST_CASE("constant and linear symbols") {
  const auto f = gaussian_spectrum(freq_grid());

  // P = k^2 divides pointwise.
  const auto scaled = solve_polynomial(f, EvenPolynomial({4.0}));
  for (std::size_t k = 0; k < f.values.size(); k += 29) {
    CHECK(scaled.values[k] == f.values[k] / 4.0);
  }

  // P(t) = 1 + t is the k = 1 resolvent, bit for bit.
  const auto via_poly = solve_polynomial(f, EvenPolynomial({1.0, 1.0}));
  const auto via_helm = solve_helmholtz(f, 1.0);
  CHECK(via_poly.values == via_helm.values);
}

TEST_CASE("the solve is an exact left inverse of the symbol") {
  const auto f = gaussian_spectrum(freq_grid());
  const EvenPolynomial P({4.0, 0.0, 1.0});
  const auto u = solve_polynomial(f, P);
  const auto back = apply_multiplier(u, [&P](const std::vector<double>& xi) {
    return P(xi[0] * xi[0]);
  });
  CHECK(rel_l2_diff(back, f) <= 1e-12);

  // Determinism: identical inputs, identical bits.
  const auto again = solve_polynomial(f, P);
  CHECK(again.values == u.values);
}

TEST_CASE("regularity ledger for the quartic symbol") {
  const auto freq = freq_grid();
  const auto f = gaussian_spectrum(freq);
  const EvenPolynomial P({4.0, 0.0, 1.0});
  const auto u = solve_polynomial(f, P);

  const auto rec = regularity_report(f, u, 0.5, 2.0, P);
  CHECK(rec.pass);
  CHECK(rec.ratio <= rec.bound + 1e-8);
  // sup (1+t)^2 / (4+t^2) is attained at t = 4 with value 25/20.
  CHECK(rec.bound == doctest::Approx(1.25).epsilon(1e-6));
  CHECK(rec.source_norm > 0.0);
  CHECK(std::isfinite(rec.solution_norm));

  // Gain above the degree has an infinite scalar bound.
  const auto loose = regularity_report(f, u, 0.0, 3.0, P);
  CHECK(std::isinf(loose.bound));
  CHECK(loose.pass);
}

TEST_CASE("regularity ledger for resolvents and the identity") {
  const auto freq = freq_grid();
  const auto f = gaussian_spectrum(freq);

  // k = 1, gain 1: the bound is exactly 1 and the ratio hits it.
  const EvenPolynomial P1({1.0, 1.0});
  const auto u1 = solve_helmholtz(f, 1.0);
  const auto rec1 = regularity_report(f, u1, 0.0, 1.0, P1);
  CHECK(rec1.bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rec1.ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rec1.pass);

  // k = 2, gain 1: sup (1+t)/(4+t) = 1, approached only at infinity.
  const EvenPolynomial P2({4.0, 1.0});
  const auto u2 = solve_helmholtz(f, 2.0);
  const auto rec2 = regularity_report(f, u2, 0.0, 1.0, P2);
  CHECK(rec2.bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rec2.ratio < 1.0);
  CHECK(rec2.pass);

  // u = f with the unit symbol: ratio 1, bound 1.
  const auto rec3 = regularity_report(f, f, 0.0, 0.0, EvenPolynomial({1.0}));
  CHECK(rec3.ratio == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rec3.bound == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rec3.pass);

  // Zero source against zero solution.
  GridFunction z;
  z.grid = freq;
  z.values.assign(freq->size(), 0.0);
  const auto rec4 = regularity_report(z, z, 0.0, 1.0, P1);
  CHECK(rec4.ratio == 0.0);
  CHECK(rec4.pass);
}

TEST_CASE("two-axis solve keeps the closed-form spectrum") {
  const AlphaParams a2({0.0, 1.0});
  const auto freq2 = build_grid(a2, {8.0, 8.0}, {40, 40});
  SpectralDistribution F;
  F.grid = freq2;
  F.values.resize(freq2->size());
  const FunctionSpec g = FunctionSpec::gaussian(1.0);
  std::vector<double> xi(2);
  for (std::size_t k = 0; k < freq2->size(); ++k) {
    freq2->point(k, xi);
    F.values[k] = g.exact_transform(a2, xi);
  }
  const auto u = solve_helmholtz(F, 2.0);
  for (std::size_t k = 0; k < freq2->size(); k += 97) {
    freq2->point(k, xi);
    const double t = xi[0] * xi[0] + xi[1] * xi[1];
    CHECK(u.values[k] ==
          doctest::Approx(F.values[k] / (4.0 + t)).epsilon(1e-14));
  }
}
