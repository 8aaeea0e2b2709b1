#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "approx.hpp"
#include "pclab/domain.hpp"
#include "pclab/errors.hpp"
#include "pclab/rng.hpp"

using namespace pclab;
using testutil::close_c;
using testutil::close_rel;

TEST_CASE("unit ball defining function and first two derivative levels") {
  Domain ball = Domain::unit_ball(3);
  CVec z{{0.2, 0.1}, {-0.5, 0.3}, {0.0, 0.4}};
  double expected = std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]) - 1.0;
  CHECK(ball.rho(z) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(ball.rho(CVec{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}) == doctest::Approx(0.0));

  CVec g = ball.gradient_zbar(z);
  for (int j = 0; j < 3; ++j) CHECK(close_c(g[j], z[j], 1e-15));

  CMat h = ball.complex_hessian(z);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) CHECK(close_c(h.at(p, q), p == q ? 1.0 : 0.0, 1e-15));
}

TEST_CASE("egg defining function matches hand-computed values") {
  Domain egg = Domain::egg({1, 2});
  CVec z{{0.5, 0.0}, {0.6, 0.0}};
  CHECK(egg.rho(z) == doctest::Approx(-0.6204).epsilon(1e-14));

  CVec g = egg.gradient_zbar(z);
  CHECK(close_c(g[0], 0.5, 1e-14));
  CHECK(close_c(g[1], 0.432, 1e-14));

  CMat h = egg.complex_hessian(z);
  CHECK(close_c(h.at(0, 0), 1.0, 1e-14));
  CHECK(close_c(h.at(1, 1), 1.44, 1e-14));
  CHECK(close_c(h.at(0, 1), 0.0, 1e-14));
  CHECK(egg.exponents() == std::vector<int>{1, 2});
}

TEST_CASE("invalid construction is rejected") {
  CHECK_THROWS_AS(Domain::unit_ball(0), InputError);
  CHECK_THROWS_AS(Domain::egg({1, 0}), InputError);
  CHECK_THROWS_AS(Domain::egg({}), InputError);
}

TEST_CASE("polynomial kind requires conjugate-symmetric terms") {
  MonomialTerm cross{{1, 0}, {0, 1}, 1.0};
  MonomialTerm mirror{{0, 1}, {1, 0}, 1.0};
  CHECK_THROWS_AS(Domain::polynomial(2, {cross}), InputError);

  Domain d = Domain::polynomial(2, {cross, mirror});
  SplitMix64 rng(11);
  for (int i = 0; i < 20; ++i) {
    CVec z{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, {rng.uniform(-1, 1), rng.uniform(-1, 1)}};
    double direct = 2.0 * (z[0] * std::conj(z[1])).real();
    CHECK(d.rho(z) == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("radial exponential derivatives match symbolic reference values") {
  CHECK(close_rel(exp_flat_radial_derivative(0, 0.5), 0.36787944117144232, 1e-13));
  CHECK(close_rel(exp_flat_radial_derivative(1, 0.5), 1.4715177646857693, 1e-13));
  CHECK(exp_flat_radial_derivative(2, 0.5) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(close_rel(exp_flat_radial_derivative(3, 0.5), -11.772142117486154, 1e-13));
  CHECK(close_rel(exp_flat_radial_derivative(8, 0.25), 131975567.20227849, 1e-12));
  CHECK(close_rel(exp_flat_radial_derivative(16, 0.04), 8.3740987467284751e29, 1e-12));
  CHECK(close_rel(exp_flat_radial_derivative(16, 1.0 / 512.0), 3.6501691387699002e-136, 1e-9));
  CHECK(close_rel(exp_flat_radial_derivative(24, 1.0 / 1024.0), 9.3662984598156860e-301, 1e-9));
  CHECK(close_rel(exp_flat_radial_derivative(26, 1.0 / 1024.0), 9.3250456713663468e-289, 1e-9));
}

TEST_CASE("radial exponential tail is flat at the origin") {
  for (int k = 0; k <= 16; ++k) CHECK(exp_flat_radial_derivative(k, 0.0) == 0.0);
  // True value at u = 1/1600 is ~2.7e-618, far below double range; exact zero
  // is the correct rounding.
  CHECK(exp_flat_radial_derivative(12, 1.0 / 1600.0) == 0.0);
}

TEST_CASE("mixed exponential derivatives match symbolic reference values") {
  Domain d = Domain::exp_flat();
  CVec z{{0.1, 0.2}, {0.8, 0.3}};
  CHECK(close_c(d.derivative(z, {0, 1}, {0, 1}), {0.47947472406123164, 0.0}, 1e-12));
  CHECK(close_c(d.derivative(z, {0, 2}, {0, 1}), {-2.2772241851676936, 0.85395906943788508},
                1e-12));
  CHECK(close_c(d.derivative(z, {0, 3}, {0, 2}), {-2.5810344170514621, 0.96788790639429830},
                1e-12));
}

TEST_CASE("exp-flat defining function and flat fiber") {
  Domain d = Domain::exp_flat();
  CVec z{{0.5, 0.0}, {0.8, 0.0}};
  double u = 0.64;
  CHECK(d.rho(z) ==
        doctest::Approx(0.25 + std::exp(1.0 - 1.0 / u) - 1.0).epsilon(1e-14));

  // On the circle |z1| = 1, z2 = 0 the boundary is flat: every pure z2
  // derivative vanishes identically.
  CVec w{{1.0, 0.0}, {0.0, 0.0}};
  CHECK(d.rho(w) == doctest::Approx(0.0));
  Jet jw = d.jet(w, 10);
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; a + b <= 10; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(std::abs(jw.coeff({0, a}, {0, b})) == 0.0);
    }
}

TEST_CASE("line restriction of the egg jet matches symbolic reference values") {
  Domain egg = Domain::egg({1, 2});
  CVec base{{0.2, -0.4}, {0.6, 0.1}};
  CVec L{{0.5, 1.0 / 3.0}, {-0.25, 2.0 / 7.0}};
  Jet jet = egg.jet(base, 6);
  CHECK(close_c(jet.line_coeff(L, 0, 0), {-0.6631, 0.0}, 1e-13));
  CHECK(close_c(jet.line_coeff(L, 1, 0), {-0.12319047619047619, 0.41202380952380952}, 1e-13));
  CHECK(close_c(jet.line_coeff(L, 1, 1), {0.57442743764172336, 0.0}, 1e-13));
  CHECK(close_c(jet.line_coeff(L, 2, 1), {-0.070007288629737609, 0.11324708454810496}, 1e-13));
  CHECK(close_c(jet.line_coeff(L, 2, 2), {0.083096886713869221, 0.0}, 1e-13));
}

TEST_CASE("taylor expansion of a polynomial jet reconstructs the function exactly") {
  Domain egg = Domain::egg({1, 2});
  CVec base{{0.3, 0.1}, {-0.2, 0.5}};
  SplitMix64 rng(7);
  Jet jet = egg.jet(base, 8);
  for (int trial = 0; trial < 8; ++trial) {
    CVec L = quasi_complex_direction(trial + 1, 2, 7);
    Complex t(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
    Complex taylor(0.0);
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; a + b <= 8; ++b) {
        Complex c = jet.line_coeff(L, a, b);
        if (c == Complex(0.0)) continue;
        Complex tp(1.0);
        for (int i = 0; i < a; ++i) tp *= t;
        for (int i = 0; i < b; ++i) tp *= std::conj(t);
        taylor += c / (factorial(a) * factorial(b)) * tp;
      }
    CVec shifted = base + t * L;
    CHECK(close_c(taylor, egg.rho(shifted), 1e-12));
  }
}

TEST_CASE("jet coefficients agree with direct derivative evaluation") {
  Domain egg = Domain::egg({2, 3});
  CVec z{{0.4, -0.3}, {0.2, 0.6}};
  Jet jet = egg.jet(z, 8);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    MultiIndex a{int(rng.next() % 4), int(rng.next() % 4)};
    MultiIndex b{int(rng.next() % 4), int(rng.next() % 4)};
    if (mi_total(a) + mi_total(b) > 8) continue;
    CHECK(close_c(jet.coeff(a, b), egg.derivative(z, a, b), 1e-12));
  }
}

TEST_CASE("line coefficients along coordinate axes reduce to plain derivatives") {
  Domain d = Domain::exp_flat();
  CVec z{{0.3, -0.1}, {0.7, 0.2}};
  Jet jet = d.jet(z, 6);
  for (int axis = 0; axis < 2; ++axis) {
    CVec e{{0.0, 0.0}, {0.0, 0.0}};
    e[axis] = 1.0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 5; ++b) {
        MultiIndex alpha{0, 0}, beta{0, 0};
        alpha[axis] = a;
        beta[axis] = b;
        CHECK(close_c(jet.line_coeff(e, a, b), d.derivative(z, alpha, beta), 1e-12));
      }
  }
}

TEST_CASE("json serialization round-trips every kind") {
  std::vector<Domain> domains;
  domains.push_back(Domain::unit_ball(3));
  domains.push_back(Domain::egg({1, 4}));
  domains.push_back(Domain::exp_flat());
  domains.push_back(Domain::polynomial(
      2, {MonomialTerm{{1, 0}, {1, 0}, 1.0}, MonomialTerm{{0, 2}, {0, 2}, 0.5},
          MonomialTerm{{0, 0}, {0, 0}, -1.0}}));
  SplitMix64 rng(19);
  for (const Domain& d : domains) {
    Domain copy = Domain::from_json(d.to_json());
    CHECK(copy.kind() == d.kind());
    CHECK(copy.dimension() == d.dimension());
    for (int i = 0; i < 10; ++i) {
      CVec z;
      for (int j = 0; j < d.dimension(); ++j)
        z.push_back({rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)});
      CHECK(copy.rho(z) == doctest::Approx(d.rho(z)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(Domain::from_json(nlohmann::json{{"kind", "torus"}}), InputError);
  CHECK_THROWS_AS(Domain::from_json(nlohmann::json::array()), InputError);
}

TEST_CASE("derivative order caps are enforced") {
  Domain d = Domain::exp_flat();
  CVec z{{0.1, 0.0}, {0.5, 0.0}};
  CHECK_THROWS_AS(d.jet(z, 17), InputError);
  CHECK_THROWS_AS(d.derivative(z, {0, 20}, {0, 13}), InputError);
}
