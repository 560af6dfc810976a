#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "qedlamb/quadrature.hpp"
#include "qedlamb/specfun.hpp"
#include "reference/reference_values.hpp"

namespace ref = qedlamb::reference;

TEST_CASE("gamma function on the positive axis", "[specfun]") {
  REQUIRE_THAT(qedlamb::gamma_fn(5.0), Catch::Matchers::WithinRel(24.0, 1e-15));
  REQUIRE_THAT(qedlamb::gamma_fn(0.5),
               Catch::Matchers::WithinRel(std::sqrt(std::numbers::pi), 1e-15));
  REQUIRE_THAT(qedlamb::gamma_fn(2.0 * ref::states[0].gamma + 1.0),
               Catch::Matchers::WithinRel(ref::gamma_two_gamma1_plus_1, 1e-14));
  REQUIRE_THROWS_AS(qedlamb::gamma_fn(0.0), std::domain_error);
  REQUIRE_THROWS_AS(qedlamb::gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("Laguerre coefficients in ascending powers", "[specfun]") {
  const auto c = qedlamb::laguerre_coefficients(2, 2.0 * ref::states[0].gamma);
  REQUIRE(c.size() == 3);
  for (int i = 0; i < 3; ++i) {
    REQUIRE_THAT(c[i], Catch::Matchers::WithinRel(ref::laguerre2_coeffs[i], 1e-14));
  }
  // n = -1 is the zero polynomial by convention.
  const auto z = qedlamb::laguerre_coefficients(-1, 1.5);
  REQUIRE(z.size() == 1);
  REQUIRE(z[0] == 0.0);
  // L_2^{(0)}(x) = 1 - 2x + x^2/2 via poly_eval.
  const auto l20 = qedlamb::laguerre_coefficients(2, 0.0);
  const double x = 0.7;
  REQUIRE_THAT(qedlamb::poly_eval(l20, x),
               Catch::Matchers::WithinRel(1.0 - 2.0 * x + 0.5 * x * x, 1e-14));
}

TEST_CASE("sine and cosine integrals on the frozen grid", "[specfun]") {
  for (int i = 0; i < 15; ++i) {
    const double x = ref::si_grid_x[i];
    REQUIRE_THAT(qedlamb::sin_integral(x),
                 Catch::Matchers::WithinAbs(ref::si_values[i], 1e-13));
    REQUIRE_THAT(qedlamb::cos_integral(x),
                 Catch::Matchers::WithinAbs(ref::ci_values[i], 1e-13));
  }
  REQUIRE_THAT(qedlamb::sin_integral(0.0),
               Catch::Matchers::WithinRel(-std::numbers::pi / 2.0, 1e-15));
  REQUIRE_THROWS_AS(qedlamb::sin_integral(-1.0), std::domain_error);
  REQUIRE_THROWS_AS(qedlamb::cos_integral(0.0), std::domain_error);
}

TEST_CASE("auxiliary f and g on the frozen grid", "[specfun]") {
  for (int i = 0; i < 5; ++i) {
    const double x = ref::fg_grid_x[i];
    REQUIRE_THAT(qedlamb::aux_f(x),
                 Catch::Matchers::WithinAbs(ref::f_aux_values[i], 1e-13));
    REQUIRE_THAT(qedlamb::aux_g(x),
                 Catch::Matchers::WithinAbs(ref::g_aux_values[i], 1e-13));
  }
  // Both are positive and decreasing for x > 0.
  double prev_f = qedlamb::aux_f(0.1);
  double prev_g = qedlamb::aux_g(0.1);
  for (double x : {0.5, 1.0, 3.0, 8.0, 25.0}) {
    const double f = qedlamb::aux_f(x);
    const double g = qedlamb::aux_g(x);
    REQUIRE(f > 0.0);
    REQUIRE(g > 0.0);
    REQUIRE(f < prev_f);
    REQUIRE(g < prev_g);
    prev_f = f;
    prev_g = g;
  }
}

TEST_CASE("complex auxiliary functions near the origin", "[specfun]") {
  const std::complex<double> z0(ref::z0_re, ref::z0_im);
  const auto f = qedlamb::aux_f(z0);
  const auto g = qedlamb::aux_g(z0);
  REQUIRE_THAT(f.real(), Catch::Matchers::WithinRel(ref::f_z0_re, 1e-12));
  REQUIRE_THAT(f.imag(), Catch::Matchers::WithinRel(ref::f_z0_im, 1e-10));
  REQUIRE_THAT(g.real(), Catch::Matchers::WithinRel(ref::g_z0_re, 1e-12));
  REQUIRE_THAT(g.imag(), Catch::Matchers::WithinRel(ref::g_z0_im, 1e-12));
  // f sin - g cos reconstructs Ci and -(f cos + g sin) the shifted Si.
  const auto ci = f * std::sin(z0) - g * std::cos(z0);
  const auto si = -(f * std::cos(z0) + g * std::sin(z0));
  REQUIRE_THAT(ci.real(), Catch::Matchers::WithinRel(ref::ci_z0_re, 1e-12));
  REQUIRE_THAT(ci.imag(), Catch::Matchers::WithinRel(ref::ci_z0_im, 1e-12));
  REQUIRE_THAT(si.real() + std::numbers::pi / 2.0,
               Catch::Matchers::WithinRel(ref::si_z0_re, 1e-10));
  REQUIRE_THAT(si.imag(), Catch::Matchers::WithinRel(ref::si_z0_im, 1e-10));
  REQUIRE_THROWS_AS(qedlamb::aux_f(std::complex<double>(2.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("theta-normalized Legendre functions", "[specfun]") {
  for (const auto& spot : ref::legendre_spots) {
    REQUIRE_THAT(qedlamb::normalized_legendre(spot.l, spot.m, spot.theta),
                 Catch::Matchers::WithinRel(spot.value, 1e-13));
  }
  // Unit norm and orthogonality under the sin(theta) weight.
  qedlamb::QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  auto norm53 = qedlamb::integrate(
      [](double t) {
        const double v = qedlamb::normalized_legendre(5, 3, t);
        return v * v * std::sin(t);
      },
      0.0, std::numbers::pi, spec);
  REQUIRE_THAT(norm53, Catch::Matchers::WithinRel(1.0, 1e-12));
  auto cross = qedlamb::integrate(
      [](double t) {
        return qedlamb::normalized_legendre(2, 1, t) *
               qedlamb::normalized_legendre(3, 1, t) * std::sin(t);
      },
      0.0, std::numbers::pi, spec);
  REQUIRE(std::abs(cross) < 1e-13);
  REQUIRE_THROWS_AS(qedlamb::normalized_legendre(1, 2, 0.5), std::domain_error);
}
