#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "approx.hpp"
#include "pclab/errors.hpp"
#include "pclab/levi.hpp"

using namespace pclab;
using testutil::close_rel;

namespace {

CVec egg_boundary_point(const Domain& egg, double z2_abs, double phase1, double phase2) {
  int m1 = egg.exponents()[0], m2 = egg.exponents()[1];
  double u = z2_abs * z2_abs;
  double r1 = std::pow(1.0 - std::pow(u, m2), 1.0 / (2.0 * m1));
  return {Complex(r1 * std::cos(phase1), r1 * std::sin(phase1)),
          Complex(z2_abs * std::cos(phase2), z2_abs * std::sin(phase2))};
}

}  // namespace

TEST_CASE("levi determinant matches symbolic reference values") {
  Domain egg12 = Domain::egg({1, 2});
  CVec p = egg_boundary_point(egg12, 0.6, 0.0, 0.0);
  CHECK(close_rel(levi_determinant(egg12, p), 1.3623153305885202, 1e-12));

  CVec q = egg_boundary_point(egg12, 0.6, 0.7, 0.3);
  CHECK(close_rel(levi_determinant(egg12, q), 1.3623153305885202, 1e-12));

  Domain egg23 = Domain::egg({2, 3});
  CVec p23 = egg_boundary_point(egg23, 0.5, 0.0, 0.0);
  CHECK(close_rel(levi_determinant(egg23, p23), 0.57014586380386299, 1e-12));

  Domain ef = Domain::exp_flat();
  double u = 0.49;
  CVec pe{Complex(std::sqrt(1.0 - std::exp(1.0 - 1.0 / u)), 0.0), Complex(0.7, 0.0)};
  CHECK(close_rel(levi_determinant(ef, pe), 1.2011942345920022, 1e-12));
}

TEST_CASE("unit ball has identity levi form everywhere") {
  Domain ball = Domain::unit_ball(2);
  LeviMatrix lm = levi_matrix(ball, CVec{{1.0, 0.0}, {0.0, 0.0}});
  CHECK(lm.entries.n == 1);
  CHECK(std::abs(lm.entries.at(0, 0) - Complex(1.0)) < 1e-12);
  CHECK(levi_determinant(ball, CVec{{0.0, 0.0}, {1.0, 0.0}}) == doctest::Approx(1.0));

  Domain ball3 = Domain::unit_ball(3);
  double s = 1.0 / std::sqrt(3.0);
  CVec p{{s, 0.0}, {0.0, s}, {s, 0.0}};
  CHECK(levi_determinant(ball3, p) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("egg weak circle and flat fiber have zero determinant") {
  Domain egg = Domain::egg({1, 2});
  CHECK(std::abs(levi_determinant(egg, CVec{{1.0, 0.0}, {0.0, 0.0}})) < 1e-14);
  CVec rotated{{std::cos(0.7), std::sin(0.7)}, {0.0, 0.0}};
  CHECK(std::abs(levi_determinant(egg, rotated)) < 1e-14);
  CHECK(levi_determinant(egg, CVec{{0.0, 0.0}, {1.0, 0.0}}) == doctest::Approx(1.0));

  Domain ef = Domain::exp_flat();
  CHECK(levi_determinant(ef, CVec{{1.0, 0.0}, {0.0, 0.0}}) == 0.0);
}

TEST_CASE("classification separates the weak circle from strict points") {
  Domain egg = Domain::egg({1, 2});
  double tol = default_weak_tol(egg);
  CHECK(tol > 0.0);
  CHECK(classify_point(egg, CVec{{std::cos(0.7), std::sin(0.7)}, {0.0, 0.0}}, tol) ==
        PointClass::Weak);
  CHECK(classify_point(egg, egg_boundary_point(egg, 0.6, 0.0, 0.0), tol) == PointClass::Strict);

  Domain ball = Domain::unit_ball(2);
  CHECK(classify_point(ball, CVec{{0.0, 0.0}, {1.0, 0.0}}, default_weak_tol(ball)) ==
        PointClass::Strict);

  Domain ef = Domain::exp_flat();
  double tol_ef = default_weak_tol(ef);
  CHECK(classify_point(ef, CVec{{1.0, 0.0}, {0.0, 0.0}}, tol_ef) == PointClass::Weak);
  double u = 0.49;
  CVec strict_pt{Complex(std::sqrt(1.0 - std::exp(1.0 - 1.0 / u)), 0.0), Complex(0.7, 0.0)};
  CHECK(classify_point(ef, strict_pt, tol_ef) == PointClass::Strict);
}

TEST_CASE("negative levi determinant is rejected as not pseudoconvex") {
  Domain npc = Domain::polynomial(
      2, {MonomialTerm{{1, 0}, {1, 0}, 1.0}, MonomialTerm{{0, 2}, {0, 2}, 1.0},
          MonomialTerm{{0, 1}, {0, 1}, -1.0}, MonomialTerm{{0, 0}, {0, 0}, -1.0}});
  double u = 0.09;
  CVec p{Complex(std::sqrt(1.0 + u - u * u), 0.0), Complex(0.3, 0.0)};
  CHECK(std::abs(npc.rho(p)) < 1e-12);
  CHECK(close_rel(levi_determinant(npc, p), -0.55312600663856249, 1e-12));
  CHECK_THROWS_AS(classify_point(npc, p, 1e-8), NumericError);
}

TEST_CASE("levi determinant does not depend on the tangent frame phase") {
  Domain egg = Domain::egg({1, 2});
  CVec p = egg_boundary_point(egg, 0.45, 1.1, 2.3);
  BoundaryFrame f1 = tangent_frame(egg, p);
  BoundaryFrame f2 = f1;
  f2.tangents[0] = Complex(std::cos(0.9), std::sin(0.9)) * f2.tangents[0];
  Complex d1 = det(levi_matrix(egg, p, f1).entries);
  Complex d2 = det(levi_matrix(egg, p, f2).entries);
  CHECK(std::abs(d1 - d2) < 1e-8);
}

TEST_CASE("levi form is positive semidefinite on the model domains") {
  for (const Domain& d : {Domain::egg({1, 2}), Domain::egg({1, 4}), Domain::exp_flat(),
                          Domain::unit_ball(3)}) {
    for (const CVec& p : boundary_sample(d, 12, 5)) {
      LeviMatrix lm = levi_matrix(d, p);
      std::vector<double> eig = hermitian_eigenvalues(lm.entries);
      CHECK(eig.front() >= -1e-8);
    }
  }
}

TEST_CASE("weak set sampling finds the circle and nothing on the ball") {
  Domain ball = Domain::unit_ball(2);
  WeakSetSample empty = weak_set_sample(ball, 64, default_weak_tol(ball));
  CHECK(empty.points.empty());
  CHECK(empty.total_sampled == 64 * 64);

  Domain egg = Domain::egg({1, 2});
  WeakSetSample ws = weak_set_sample(egg, 64, default_weak_tol(egg));
  CHECK(ws.points.size() == 64);
  for (const CVec& p : ws.points) {
    CHECK(std::abs(p[1]) < 1e-12);
    CHECK(std::abs(std::abs(p[0]) - 1.0) < 1e-12);
    CHECK(std::abs(egg.rho(p)) < 1e-10);
  }

  Domain ef = Domain::exp_flat();
  WeakSetSample wef = weak_set_sample(ef, 64, default_weak_tol(ef));
  CHECK(wef.points.size() >= 64);
  for (const CVec& p : wef.points) CHECK(std::abs(p[1]) < 0.2);
}

TEST_CASE("nonflatness order detects the quadratic vanishing rate of the egg") {
  Domain egg = Domain::egg({1, 2});
  CVec p{{1.0, 0.0}, {0.0, 0.0}};
  CVec v{{0.0, 0.0}, {1.0, 0.0}};
  NonflatnessResult r = nonflatness_order(egg, p, v, 8);
  CHECK_FALSE(r.flat);
  CHECK(r.order == 2);
  CHECK(r.value == doctest::Approx(8.0).epsilon(1e-4));
}

TEST_CASE("nonflatness order reports flat on the exponentially flat circle") {
  Domain ef = Domain::exp_flat();
  CVec p{{1.0, 0.0}, {0.0, 0.0}};
  NonflatnessResult r = nonflatness_order(ef, p, CVec{{0.0, 0.0}, {1.0, 0.0}}, 12);
  CHECK(r.flat);
  NonflatnessResult ri = nonflatness_order(ef, p, CVec{{0.0, 0.0}, {0.0, 1.0}}, 12);
  CHECK(ri.flat);
}

TEST_CASE("nonflatness order is zero where the determinant does not vanish") {
  Domain ball = Domain::unit_ball(2);
  CVec p{{1.0, 0.0}, {0.0, 0.0}};
  NonflatnessResult r = nonflatness_order(ball, p, CVec{{0.0, 0.0}, {1.0, 0.0}}, 2);
  CHECK_FALSE(r.flat);
  CHECK(r.order == 0);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("nonflatness rejects non-tangent directions") {
  Domain egg = Domain::egg({1, 2});
  CVec p{{1.0, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(nonflatness_order(egg, p, CVec{{1.0, 0.0}, {0.0, 0.0}}, 4), InputError);
}
