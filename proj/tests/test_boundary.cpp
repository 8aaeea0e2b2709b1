#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "approx.hpp"
#include "pclab/boundary.hpp"
#include "pclab/errors.hpp"
#include "pclab/rng.hpp"

using namespace pclab;
using testutil::close_rel;

TEST_CASE("ball projection is the radial one") {
  Domain ball = Domain::unit_ball(2);
  CVec z{{0.3, 0.0}, {0.0, 0.4}};
  ProjectionResult pr = project_to_boundary(ball, z);
  CHECK(pr.distance == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(pr.point[0] - Complex(0.6, 0.0)) < 1e-14);
  CHECK(std::abs(pr.point[1] - Complex(0.0, 0.8)) < 1e-14);
  CHECK(boundary_distance(ball, CVec{{0.5, 0.0}, {0.0, 0.0}}) == doctest::Approx(0.5));
  CHECK(boundary_distance(ball, CVec{{2.0, 0.0}, {0.0, 0.0}}) == doctest::Approx(-1.0));
}

TEST_CASE("egg projection reaches the true nearest point") {
  Domain egg = Domain::egg({1, 2});
  CVec a{{0.7, 0.0}, {0.4, 0.0}};
  ProjectionResult pr = project_to_boundary(egg, a);
  CHECK(std::abs(egg.rho(pr.point)) < 1e-10);
  CHECK(pr.distance == doctest::Approx(0.28371256018743340).epsilon(1e-8));
  CHECK(std::abs(pr.point[0] - Complex(0.97873339455111314, 0.0)) < 1e-7);
  CHECK(std::abs(pr.point[1] - Complex(0.45291985988380462, 0.0)) < 1e-7);
  CHECK(boundary_distance(egg, a) == doctest::Approx(0.28371256018743340).epsilon(1e-8));
}

TEST_CASE("projection is idempotent on boundary points") {
  Domain egg = Domain::egg({1, 2});
  for (const CVec& p : boundary_sample(egg, 9, 3)) {
    ProjectionResult pr = project_to_boundary(egg, p);
    CHECK(pr.distance < 1e-10);
    CHECK(vnorm(pr.point - p) < 1e-10);
  }
}

TEST_CASE("projection foot point sits along the normal") {
  Domain ef = Domain::exp_flat();
  SplitMix64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    CVec p = boundary_sample(ef, 13, 9)[std::size_t(rng.next() % 169)];
    CVec nu = outward_normal(ef, p);
    double depth = rng.uniform(0.01, 0.15);
    CVec a = p - Complex(depth) * nu;
    ProjectionResult pr = project_to_boundary(ef, a);
    CVec diff = a - pr.point;
    double dist = vnorm(diff);
    CHECK(dist <= depth + 1e-9);
    if (dist > 1e-12) {
      CVec nx = outward_normal(ef, pr.point);
      CVec tang = diff - Complex(real_dot(diff, nx)) * nx;
      CHECK(vnorm(tang) / dist < 1e-7);
    }
  }
}

TEST_CASE("projection fails at the gradient critical point") {
  Domain egg = Domain::egg({1, 2});
  CHECK_THROWS_AS(project_to_boundary(egg, CVec{{0.0, 0.0}, {0.0, 0.0}}), CollarError);
}

TEST_CASE("tangent frame is hermitian orthonormal") {
  for (const Domain& d :
       {Domain::unit_ball(3), Domain::egg({1, 2, 3}), Domain::exp_flat(), Domain::egg({2, 2})}) {
    for (const CVec& p : boundary_sample(d, 6, 11)) {
      BoundaryFrame f = tangent_frame(d, p);
      std::vector<CVec> all{f.normal};
      all.insert(all.end(), f.tangents.begin(), f.tangents.end());
      CHECK(int(all.size()) == d.dimension());
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          Complex ip = hdot(all[i], all[j]);
          double want = i == j ? 1.0 : 0.0;
          CHECK(std::abs(ip - Complex(want)) < 1e-10);
        }
    }
  }
}

TEST_CASE("ball tangent at a diagonal point is the antidiagonal line") {
  Domain ball = Domain::unit_ball(2);
  double s = 1.0 / std::sqrt(2.0);
  BoundaryFrame f = tangent_frame(ball, CVec{{s, 0.0}, {s, 0.0}});
  CHECK(std::abs(f.normal[0] - Complex(s)) < 1e-12);
  CVec anti{{s, 0.0}, {-s, 0.0}};
  CHECK(std::abs(hdot(f.tangents[0], anti)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("boundary grids lie on the boundary and have the advertised size") {
  for (const Domain& d : {Domain::unit_ball(2), Domain::egg({1, 2}), Domain::exp_flat()}) {
    std::vector<CVec> pts = boundary_sample(d, 16, 1);
    CHECK(pts.size() == 256);
    for (const CVec& p : pts) CHECK(std::abs(d.rho(p)) < 1e-10);
  }
}

TEST_CASE("ray sampling covers the boundary of higher-dimensional domains") {
  Domain ball3 = Domain::unit_ball(3);
  std::vector<CVec> pts = boundary_sample(ball3, 10, 7);
  CHECK(pts.size() == 100);
  for (const CVec& p : pts) {
    CHECK(vnorm(p) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(ball3.rho(p)) < 1e-9);
  }

  Domain poly = Domain::polynomial(
      2, {MonomialTerm{{1, 0}, {1, 0}, 1.0}, MonomialTerm{{0, 2}, {0, 2}, 1.0},
          MonomialTerm{{0, 0}, {0, 0}, -1.0}});
  for (const CVec& p : boundary_sample(poly, 8, 3)) CHECK(std::abs(poly.rho(p)) < 1e-9);
}

TEST_CASE("outward normal points out of the domain") {
  Domain egg = Domain::egg({1, 4});
  for (const CVec& p : boundary_sample(egg, 8, 2)) {
    if (vnorm(p - CVec{{0.0, 0.0}, {0.0, 0.0}}) < 1e-6) continue;
    CVec nu = outward_normal(egg, p);
    CHECK(vnorm(nu) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(egg.rho(p + Complex(1e-4) * nu) > 0.0);
    CHECK(egg.rho(p - Complex(1e-4) * nu) < 0.0);
  }
}
