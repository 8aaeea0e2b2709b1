#include "pclab/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "pclab/boundary.hpp"
#include "pclab/errors.hpp"
#include "pclab/parallel.hpp"
#include "pclab/rng.hpp"

namespace pclab {

namespace {

// Area of the unit disc, the volume of the one-dimensional complex ball.
constexpr double kDiscVolume = M_PI;

void series_guard(const DivisorGraph& x, double R) {
  if (!(R > 0.0)) throw InputError("graph disc radius must be positive");
  double mass = 0.0;
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    mass += std::abs(x.coeffs[k]) * std::pow(R, double(k));
  }
  if (!std::isfinite(mass) || mass > 1e8) {
    throw NumericError("the graph series blows up on this disc");
  }
}

Complex eval_series(const std::vector<Complex>& c, Complex w) {
  Complex v(0.0);
  for (std::size_t k = c.size(); k-- > 0;) v = v * w + c[k];
  return v;
}

// Dirichlet mass of g over the disc of radius R: radial Simpson panels of
// angular trapezoid sums, doubled until two levels agree.
double dirichlet_integral(const DivisorGraph& x, double R) {
  if (x.dcoeffs.empty()) return 0.0;
  auto level = [&](int nr, int na) {
    std::vector<double> ring(std::size_t(nr) + 1, 0.0);
    parallel_for(std::size_t(nr) + 1, [&](std::size_t i) {
      const double r = R * double(i) / nr;
      double s = 0.0;
      for (int j = 0; j < na; ++j) {
        const double th = 2.0 * M_PI * j / na;
        const Complex gp = eval_series(x.dcoeffs, Complex(r * std::cos(th), r * std::sin(th)));
        s += std::norm(gp);
      }
      ring[i] = s * (2.0 * M_PI / na) * r;
    });
    double sum = ring[0] + ring[nr];
    for (int i = 1; i < nr; ++i) sum += ring[i] * ((i % 2) ? 4.0 : 2.0);
    return sum * (R / nr) / 3.0;
  };
  double prev = level(16, 32);
  for (int nr = 32, na = 64; nr <= 4096; nr *= 2, na *= 2) {
    const double cur = level(nr, na);
    if (std::abs(cur - prev) <= 1e-6 * std::max(std::abs(cur), 1e-14)) return cur;
    prev = cur;
  }
  throw NumericError("disc quadrature did not settle");
}

double triangle_area4(const double* a, const double* b, const double* c) {
  double u2 = 0.0, v2 = 0.0, uv = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double u = b[k] - a[k];
    const double v = c[k] - a[k];
    u2 += u * u;
    v2 += v * v;
    uv += u * v;
  }
  return 0.5 * std::sqrt(std::max(0.0, u2 * v2 - uv * uv));
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(b), 1e-12);
}

}  // namespace

DivisorGraph make_graph(std::vector<Complex> coeffs) {
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InputError("graph coefficients must be finite");
    }
  }
  DivisorGraph x;
  x.coeffs = std::move(coeffs);
  for (std::size_t k = 1; k < x.coeffs.size(); ++k) {
    x.dcoeffs.push_back(double(k) * x.coeffs[k]);
  }
  return x;
}

Complex graph_eval(const DivisorGraph& x, Complex w) { return eval_series(x.coeffs, w); }

Complex graph_deriv(const DivisorGraph& x, Complex w) { return eval_series(x.dcoeffs, w); }

ProjectionAreas graph_areas(const DivisorGraph& x, double R) {
  series_guard(x, R);
  ProjectionAreas a;
  a.a1 = M_PI * R * R;
  a.a2 = dirichlet_integral(x, R);
  a.total = a.a1 + a.a2;
  return a;
}

double graph_surface_area(const DivisorGraph& x, double R) {
  series_guard(x, R);
  auto level = [&](int nr) {
    const int na = 2 * nr;
    std::vector<double> prev_ring, ring(std::size_t(na) * 4);
    double area = 0.0;
    for (int i = 0; i <= nr; ++i) {
      const double r = R * double(i) / nr;
      for (int j = 0; j < na; ++j) {
        const double th = 2.0 * M_PI * j / na;
        const Complex w(r * std::cos(th), r * std::sin(th));
        const Complex g = eval_series(x.coeffs, w);
        double* node = &ring[std::size_t(j) * 4];
        node[0] = g.real();
        node[1] = g.imag();
        node[2] = w.real();
        node[3] = w.imag();
      }
      if (i > 0) {
        for (int j = 0; j < na; ++j) {
          const int jn = (j + 1) % na;
          const double* p00 = &prev_ring[std::size_t(j) * 4];
          const double* p01 = &prev_ring[std::size_t(jn) * 4];
          const double* p10 = &ring[std::size_t(j) * 4];
          const double* p11 = &ring[std::size_t(jn) * 4];
          area += triangle_area4(p00, p10, p11) + triangle_area4(p00, p11, p01);
        }
      }
      prev_ring = ring;
    }
    return area;
  };
  double prev = level(32);
  for (int nr = 64; nr <= 2048; nr *= 2) {
    const double cur = level(nr);
    if (std::abs(cur - prev) <= 1e-5 * std::max(std::abs(cur), 1e-14)) return cur;
    prev = cur;
  }
  throw NumericError("surface mesh did not settle");
}

WirtingerReport wirtinger_check(const DivisorGraph& x) {
  const ProjectionAreas a = graph_areas(x, 1.0);
  WirtingerReport r;
  r.total = a.total;
  r.ok = a.total >= M_PI - 1e-6;
  r.equality = std::abs(a.total - M_PI) < 1e-6;
  return r;
}

ChartScalingReport chart_scaling_check(const DivisorGraph& y, double delta, double r,
                                       const Weight& w) {
  if (!(delta > 0.0)) throw InputError("chart delta must be positive");
  if (!(r > 0.0)) throw InputError("degenerate chart: the radius function vanishes");
  if (w.size() != 2 || w[0] != 1 || w[1] < 1) {
    throw InputError("chart scaling needs a finite two-slot weight starting at 1");
  }
  // Maximum modulus on the rim decides containment in the unit polydisc.
  for (int j = 0; j < 128; ++j) {
    const double th = 2.0 * M_PI * j / 128;
    if (std::abs(graph_eval(y, Complex(std::cos(th), std::sin(th)))) > 1.0 + 1e-9) {
      throw InputError("the unit-chart graph leaves the unit polydisc");
    }
  }

  const ProjectionAreas unit = graph_areas(y, 1.0);
  const double s1 = delta * std::pow(r, 1.0 / w[0]);
  const double s2 = delta * std::pow(r, 1.0 / w[1]);
  std::vector<Complex> amb_coeffs(y.coeffs.size());
  for (std::size_t k = 0; k < y.coeffs.size(); ++k) {
    amb_coeffs[k] = y.coeffs[k] * s1 / std::pow(s2, double(k));
  }

  ChartScalingReport rep;
  rep.ambient = graph_areas(make_graph(std::move(amb_coeffs)), s2);
  rep.predicted.a1 = delta * delta * std::pow(r, 2.0 * mu_complement(w, 1)) * unit.a1;
  rep.predicted.a2 = delta * delta * std::pow(r, 2.0 * mu_complement(w, 2)) * unit.a2;
  rep.predicted.total = rep.predicted.a1 + rep.predicted.a2;
  rep.ok = rel_close(rep.ambient.a1, rep.predicted.a1, 1e-4) &&
           rel_close(rep.ambient.a2, rep.predicted.a2, 1e-4) &&
           rel_close(rep.ambient.total, rep.predicted.total, 1e-4);
  return rep;
}

std::vector<CVec> divisor_sites(const Domain& d, const DivisorGraph& x, int candidates,
                                std::uint64_t seed) {
  if (d.dimension() != 2) throw InputError("graph divisors live in two complex dimensions");
  if (candidates < 0) throw InputError("candidate count must be nonnegative");
  std::vector<CVec> sites;
  for (int i = 1; i <= candidates; ++i) {
    const std::vector<double> h = halton_point(std::uint64_t(i), 2, seed);
    const double rad = std::sqrt(h[0]);
    const Complex w(rad * std::cos(2.0 * M_PI * h[1]), rad * std::sin(2.0 * M_PI * h[1]));
    const CVec p = {graph_eval(x, w), w};
    if (d.rho(p) >= 0.0) continue;
    try {
      const double dist = boundary_distance(d, p);
      if (dist >= 1e-3 && dist <= 0.25) sites.push_back(p);
    } catch (const CollarError&) {
    } catch (const NumericError&) {
    }
  }
  return sites;
}

double collar_area_budget(const Domain& d, const DivisorGraph& x, double collar) {
  if (d.dimension() != 2) throw InputError("graph divisors live in two complex dimensions");
  if (!(collar > 0.0)) throw InputError("collar depth must be positive");
  series_guard(x, 1.0);
  auto level = [&](int nr, int na) {
    std::vector<double> rows(std::size_t(nr), 0.0);
    parallel_for(std::size_t(nr), [&](std::size_t i) {
      const double r = (double(i) + 0.5) / nr;
      double s = 0.0;
      for (int j = 0; j < na; ++j) {
        const double th = 2.0 * M_PI * (j + 0.5) / na;
        const Complex w(r * std::cos(th), r * std::sin(th));
        const CVec p = {graph_eval(x, w), w};
        if (d.rho(p) >= 0.0) continue;
        double dist;
        try {
          dist = boundary_distance(d, p);
        } catch (const CollarError&) {
          continue;  // too deep for a stable projection, so outside the collar
        } catch (const NumericError&) {
          continue;
        }
        if (dist > collar) continue;
        s += 1.0 + std::norm(graph_deriv(x, w));
      }
      rows[i] = s * r * (1.0 / nr) * (2.0 * M_PI / na);
    });
    double total = 0.0;
    for (double v : rows) total += v;
    return total;
  };
  const double coarse = level(384, 192);
  const double fine = level(768, 384);
  if (std::abs(fine - coarse) > 2e-2 * std::max(fine, 1e-12)) {
    throw NumericError("collar area quadrature is unstable");
  }
  return fine;
}

DivisorSumReport divisor_sum_check(const Domain& d, const GoodFamily& f, double delta,
                                   const DivisorGraph& x, int budget, std::uint64_t seed) {
  if (budget < 0) throw InputError("packing budget must be nonnegative");
  DivisorSumReport rep;
  rep.budget = collar_area_budget(d, x);
  if (budget > 0) {
    const std::vector<CVec> sites = divisor_sites(d, x, std::max(2000, 2 * budget), seed);
    const PackingResult pack =
        greedy_pack(d, f, delta, PackTarget::on_divisor(sites), budget, seed);
    for (const PackedPoint& pt : pack.points) {
      if (std::abs(pt.a[0] - graph_eval(x, pt.a[1])) > 1e-8 * (1.0 + std::abs(pt.a[0]))) {
        throw InputError("packed center does not lie on the divisor");
      }
      rep.lhs += pt.r * pt.r;
    }
    rep.lhs *= kDiscVolume * delta * delta;
    rep.packed = int(pack.points.size());
  }
  rep.saturated = rep.packed < budget;
  rep.ok = rep.lhs <= rep.budget * 1.05;
  return rep;
}

}  // namespace pclab
