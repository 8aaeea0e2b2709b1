#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "approx.hpp"
#include "pclab/divisor.hpp"
#include "pclab/domain.hpp"
#include "pclab/errors.hpp"
#include "pclab/polydisc.hpp"

using namespace pclab;

namespace {

DivisorGraph general_graph() {
  return make_graph({Complex(0.3, 0.1), Complex(0.25), Complex(-0.15, 0.2), Complex(0.0, 0.1)});
}

}  // namespace

TEST_CASE("graph evaluation follows the series and its derivative") {
  DivisorGraph x = make_graph({Complex(1.0), Complex(2.0), Complex(3.0)});
  CHECK(testutil::close_c(graph_eval(x, Complex(0.5)), Complex(2.75), 1e-15));
  CHECK(testutil::close_c(graph_deriv(x, Complex(0.5)), Complex(5.0), 1e-15));
  DivisorGraph flat = make_graph({});
  CHECK(graph_eval(flat, Complex(0.7, 0.1)) == Complex(0.0));
  CHECK(graph_deriv(flat, Complex(0.7, 0.1)) == Complex(0.0));
}

TEST_CASE("projection areas match the closed-form series values") {
  DivisorGraph flat = make_graph({Complex(0.2, -0.1)});
  ProjectionAreas a = graph_areas(flat, 1.0);
  CHECK(testutil::close_abs(a.a1, M_PI, 1e-14));
  CHECK(a.a2 == 0.0);
  CHECK(testutil::close_abs(a.total, M_PI, 1e-14));

  DivisorGraph sq = make_graph({Complex(0.0), Complex(0.0), Complex(1.0)});
  a = graph_areas(sq, 1.0);
  CHECK(testutil::close_rel(a.a2, 2.0 * M_PI, 1e-6));
  CHECK(testutil::close_rel(a.total, 3.0 * M_PI, 1e-6));

  DivisorGraph lin = make_graph({Complex(0.0), Complex(0.1)});
  a = graph_areas(lin, 1.0);
  CHECK(testutil::close_rel(a.a2, 0.01 * M_PI, 1e-6));

  a = graph_areas(general_graph(), 0.8);
  CHECK(testutil::close_rel(a.a2, 0.3112197399448685, 1e-6));
  CHECK(testutil::close_rel(a.total, 2.321839038242336, 1e-6));
}

TEST_CASE("projection areas never shrink when the disc grows") {
  DivisorGraph x = general_graph();
  ProjectionAreas prev = graph_areas(x, 0.5);
  for (double R : {0.8, 1.0, 1.3}) {
    ProjectionAreas cur = graph_areas(x, R);
    CHECK(cur.a1 > prev.a1);
    CHECK(cur.a2 >= prev.a2);
    prev = cur;
  }
}

TEST_CASE("degenerate series and radii are rejected") {
  CHECK_THROWS_AS(make_graph({Complex(std::nan(""), 0.0)}), InputError);
  std::vector<Complex> big(11, Complex(0.0));
  big[10] = Complex(1e9);
  CHECK_THROWS_AS(graph_areas(make_graph(big), 10.0), NumericError);
  CHECK_THROWS_AS(graph_areas(general_graph(), 0.0), InputError);
  CHECK_THROWS_AS(graph_areas(general_graph(), -1.0), InputError);
}

TEST_CASE("triangulated surface area agrees with the projection split") {
  std::mt19937 gen(42);
  auto coin = [&]() { return 0.6 * (double(gen()) / 4294967296.0) - 0.3; };
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> coeffs;
    for (int k = 0; k <= 4; ++k) coeffs.push_back(Complex(coin(), coin()));
    DivisorGraph x = make_graph(coeffs);
    ProjectionAreas a = graph_areas(x, 1.0);
    double direct = graph_surface_area(x, 1.0);
    CHECK(testutil::close_rel(direct, a.total, 1e-4));
  }
}

TEST_CASE("area lower bound holds with equality only for the flat disc") {
  WirtingerReport flat = wirtinger_check(make_graph({Complex(0.3, 0.2)}));
  CHECK(flat.ok);
  CHECK(flat.equality);

  WirtingerReport sq = wirtinger_check(make_graph({Complex(0.0), Complex(0.0), Complex(1.0)}));
  CHECK(sq.ok);
  CHECK_FALSE(sq.equality);
  CHECK(testutil::close_rel(sq.total, 3.0 * M_PI, 1e-6));

  WirtingerReport lin = wirtinger_check(make_graph({Complex(0.0), Complex(0.1)}));
  CHECK(lin.ok);
  CHECK_FALSE(lin.equality);
  CHECK(testutil::close_rel(lin.total, 1.01 * M_PI, 1e-6));
}

TEST_CASE("chart scaling law matches direct ambient measurement") {
  DivisorGraph flat = make_graph({});
  ChartScalingReport rep = chart_scaling_check(flat, 0.1, 0.25, {1, 2});
  CHECK(rep.ok);
  CHECK(testutil::close_rel(rep.predicted.a1, 0.007853981633974483, 1e-12));
  CHECK(rep.predicted.a2 == 0.0);
  CHECK(testutil::close_rel(rep.ambient.a1, 0.007853981633974483, 1e-12));

  // Identity chart reproduces the unit areas.
  DivisorGraph bend = make_graph({Complex(0.0), Complex(0.0), Complex(0.5)});
  ChartScalingReport ident = chart_scaling_check(bend, 1.0, 1.0, {1, 2});
  ProjectionAreas unit = graph_areas(bend, 1.0);
  CHECK(ident.ok);
  CHECK(testutil::close_rel(ident.ambient.total, unit.total, 1e-9));

  ChartScalingReport scaled = chart_scaling_check(bend, 0.1, 0.25, {1, 2});
  CHECK(scaled.ok);
  CHECK(testutil::close_rel(scaled.predicted.a2, 0.0009817477042468104, 1e-6));
  CHECK(testutil::close_rel(scaled.ambient.a2, 0.0009817477042468104, 1e-4));

  // A quartic slot stretches the second axis differently.
  ChartScalingReport quartic = chart_scaling_check(bend, 0.1, 0.25, {1, 4});
  CHECK(quartic.ok);
}

TEST_CASE("chart scaling rejects degenerate requests") {
  DivisorGraph flat = make_graph({});
  CHECK_THROWS_AS(chart_scaling_check(flat, 0.1, 0.0, {1, 2}), InputError);
  CHECK_THROWS_AS(chart_scaling_check(flat, 0.0, 0.25, {1, 2}), InputError);
  CHECK_THROWS_AS(chart_scaling_check(flat, 0.1, 0.25, {1, kInfiniteOrder}), InputError);
  CHECK_THROWS_AS(chart_scaling_check(flat, 0.1, 0.25, {2, 2}), InputError);
  CHECK_THROWS_AS(chart_scaling_check(flat, 0.1, 0.25, {1, 2, 2}), InputError);
  DivisorGraph wide = make_graph({Complex(0.0), Complex(1.5)});
  CHECK_THROWS_AS(chart_scaling_check(wide, 0.1, 0.25, {1, 2}), InputError);
}

TEST_CASE("divisor sites stay on the graph inside the collar") {
  Domain ball = Domain::unit_ball(2);
  DivisorGraph axis = make_graph({});
  std::vector<CVec> sites = divisor_sites(ball, axis, 400, 5);
  CHECK(sites.size() > 120);
  for (const CVec& s : sites) {
    CHECK(std::abs(s[0]) == 0.0);
    double dist = 1.0 - std::abs(s[1]);
    CHECK(dist >= 1e-3 - 1e-12);
    CHECK(dist <= 0.25 + 1e-9);
  }
  CHECK_THROWS_AS(divisor_sites(Domain::unit_ball(3), axis, 10, 1), InputError);
  CHECK_THROWS_AS(divisor_sites(ball, axis, -1, 1), InputError);
}

TEST_CASE("collar area budgets match the annulus closed forms") {
  Domain ball = Domain::unit_ball(2);
  double flat_budget = collar_area_budget(ball, make_graph({}));
  CHECK(testutil::close_rel(flat_budget, 1.3744467859455345, 2e-2));
  double bent_budget = collar_area_budget(ball, make_graph({Complex(0.0), Complex(0.0), Complex(0.3)}));
  CHECK(testutil::close_rel(bent_budget, 1.5340611778208944, 2e-2));
}

TEST_CASE("packed radius sums stay within the collar area budget") {
  Domain ball = Domain::unit_ball(2);
  GoodFamily fam = build_good_family(ball, minimal_field(ball, 8));
  DivisorGraph axis = make_graph({});

  DivisorSumReport rep = divisor_sum_check(ball, fam, 0.3, axis, 400, 3);
  CHECK(rep.ok);
  CHECK(rep.saturated);
  CHECK(rep.packed > 20);
  CHECK(rep.lhs > 0.01);
  CHECK(rep.lhs <= rep.budget * 1.05);

  // The candidate stream is fixed, so a higher cap cannot change a
  // saturated pack.
  DivisorSumReport again = divisor_sum_check(ball, fam, 0.3, axis, 800, 3);
  CHECK(again.packed == rep.packed);
  CHECK(again.lhs == rep.lhs);

  DivisorGraph bent = make_graph({Complex(0.0), Complex(0.0), Complex(0.3)});
  DivisorSumReport brep = divisor_sum_check(ball, fam, 0.3, bent, 400, 3);
  CHECK(brep.ok);
  CHECK(brep.saturated);
  CHECK(brep.lhs > 0.01);

  DivisorSumReport empty = divisor_sum_check(ball, fam, 0.3, axis, 0, 3);
  CHECK(empty.lhs == 0.0);
  CHECK(empty.packed == 0);
  CHECK(empty.ok);
  CHECK_THROWS_AS(divisor_sum_check(ball, fam, 0.3, axis, -1, 3), InputError);
}
