#include "pclab/convex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "pclab/errors.hpp"
#include "pclab/parallel.hpp"

namespace pclab {

namespace {

constexpr double kSearchCap = 8.0;
constexpr double kCollarDepth = 0.25;

double max_abs_rho_on_circle(const Domain& d, const CVec& x, const CVec& e, double t) {
  double worst = 0.0;
  for (int k = 0; k < 32; ++k) {
    const double th = 2.0 * M_PI * k / 32;
    const Complex lambda(t * std::cos(th), t * std::sin(th));
    worst = std::max(worst, std::abs(d.rho(x + lambda * e)));
  }
  return worst;
}

void require_boundary(const Domain& d, const CVec& x, const char* what) {
  if (std::abs(d.rho(x)) > 1e-6) throw InputError(std::string(what) + " must lie on the boundary");
}

double conjugate_exponent(double p) {
  if (p < 1.0) throw InputError("exponent must be at least 1");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

// Pseudo-ball volume at the boundary projection of a collar point, with
// delta equal to the boundary distance. Shared by the norm and SH checks.
double sigma_at(const Domain& d, const CVec& a, bool enforce_collar, double* dist_out) {
  const double dist = boundary_distance(d, a);
  if (enforce_collar && (dist <= 0.0 || dist > kCollarDepth)) {
    throw CollarError("the point must sit inside the boundary collar");
  }
  const CVec foot = project_to_boundary(d, a).point;
  if (dist_out) *dist_out = std::abs(dist);
  return pseudo_ball(d, foot, std::abs(dist)).sigma;
}

double power_norm(double sigma, double p) {
  const double pp = conjugate_exponent(p);
  if (std::isinf(pp)) return 1.0;
  return std::pow(sigma, -1.0 / pp);
}

}  // namespace

double tau(const Domain& d, const CVec& x, const CVec& e, double delta) {
  if (!(delta > 0.0)) throw InputError("tau needs a positive height");
  if (std::abs(vnorm(e) - 1.0) > 1e-8) throw InputError("tau direction must be a unit vector");
  require_boundary(d, x, "tau base point");
  auto ok = [&](double t) { return max_abs_rho_on_circle(d, x, e, t) <= delta; };
  if (ok(kSearchCap)) throw NumericError("extremal radius search is unbounded");
  return bisect_largest(ok, 0.0, kSearchCap, 1e-8);
}

PseudoBall pseudo_ball(const Domain& d, const CVec& x, double delta) {
  require_boundary(d, x, "pseudo-ball center");
  const BoundaryFrame frame = tangent_frame(d, x);
  PseudoBall b;
  b.center = x;
  b.delta = delta;
  b.taus.push_back(tau(d, x, frame.normal, delta));
  for (const CVec& t : frame.tangents) b.taus.push_back(tau(d, x, t, delta));
  b.sigma = delta;
  for (std::size_t j = 1; j < b.taus.size(); ++j) b.sigma *= b.taus[j] * b.taus[j];
  b.tent = delta * b.sigma;
  for (double t : b.taus) {
    if (!(t > 0.0)) throw NumericError("extremal radius collapsed to zero");
  }
  return b;
}

bool doubling_check(const Domain& d, const CVec& x, double delta, int n) {
  if (n < 1) throw InputError("doubling factor must be at least 1");
  const double small = pseudo_ball(d, x, delta).sigma;
  const double large = pseudo_ball(d, x, double(n) * delta).sigma;
  return small <= 0.5 * large;
}

double surrogate_kernel_norm(const Domain& d, const CVec& a, double p) {
  conjugate_exponent(p);  // validates p
  return power_norm(sigma_at(d, a, true, nullptr), p);
}

bool sh_check(const Domain& d, const CVec& a, double q) {
  if (!(q > 1.0) || std::isinf(q)) throw InputError("the exponent must lie in (1, infinity)");
  const double sigma = sigma_at(d, a, true, nullptr);
  const double lhs = power_norm(sigma, q) * power_norm(sigma, conjugate_exponent(q));
  const double rhs = 1.0 / sigma;
  return std::abs(lhs - rhs) <= 1e-10 * rhs;
}

bool sh_check2(const Domain& d, const CVec& a, double p, double q, double s) {
  if (!(p > 1.0) || !(q > 1.0) || std::isinf(p) || std::isinf(q)) {
    throw InputError("the exponents must lie in (1, infinity)");
  }
  if (std::abs(1.0 / s - (1.0 / p + 1.0 / q)) > 1e-12) {
    throw InputError("the exponents must satisfy 1/s = 1/p + 1/q");
  }
  const double sigma = sigma_at(d, a, true, nullptr);
  // Norms at the conjugates of p and q multiply to the norm at s'.
  const double lhs = std::pow(sigma, -1.0 / s);
  const double rhs = std::pow(sigma, -1.0 / p) * std::pow(sigma, -1.0 / q);
  return std::abs(lhs - rhs) <= 1e-10 * std::max(rhs, 1e-300);
}

double cp_constant(double p) {
  if (!(p > 1.0)) throw InputError("the constant is defined for exponents above 1");
  const double ratio = std::pow(2.0, 1.0 - p);
  const double closed = 1.0 + 1.0 / (1.0 - ratio);
  double sum = 0.0, term = 1.0;
  for (long k = 0; k < 1000000; ++k) {
    sum += term;
    term *= ratio;
    if (k >= 64 && term <= 1e-15 * (1.0 + sum)) break;
  }
  if (std::abs((1.0 + sum) - closed) > 1e-9 * closed) {
    throw NumericError("partial series disagrees with the closed form");
  }
  return std::pow(closed, 1.0 / p);
}

CarlesonWindow carleson_window_data(const Domain& d, const GoodFamily& f, const CVec& a,
                                    double p, const PackingResult* pack) {
  if (d.dimension() != 2) throw InputError("window quadrature is two-dimensional only");
  conjugate_exponent(p);  // validates p
  const double dist = boundary_distance(d, a);
  if (dist <= 0.0) throw CollarError("the window center must be inside the domain");

  CarlesonWindow out;
  out.out_of_collar = dist > kCollarDepth;
  const CVec x = project_to_boundary(d, a).point;
  const BoundaryFrame frame = tangent_frame(d, x);
  const double norm = power_norm(pseudo_ball(d, x, dist).sigma, p);
  out.surrogate_inverse = 1.0 / norm;

  const Polydisc window = make_polydisc(d, f.field, a, 2.0);
  const CVec& nu = frame.normal;
  const CVec b1 = Complex(0.0, 1.0) * nu;
  const CVec& t2 = frame.tangents[0];
  const CVec b3 = Complex(0.0, 1.0) * t2;
  const double w1 = std::min(window.radii[0], 3.0);
  const double w23 = std::min(window.radii[1], 3.0);

  auto in_window = [&](const CVec& z) {
    CVec rel = z + Complex(-1.0) * window.center;
    if (std::abs(hdot(rel, window.frame.normal)) > window.radii[0]) return false;
    return std::abs(hdot(rel, window.frame.tangents[0])) <= window.radii[1];
  };

  // Boundary patch as a graph over the tangent hyperplane: at each node of
  // the (t1, t2, t3) box, shoot along the inward normal for the zero of rho
  // and weight the hit by the graph area element.
  const int n1 = 24, n23 = 48;
  std::vector<double> slices(n1, 0.0);
  parallel_for(std::size_t(n1), [&](std::size_t i1) {
    const double t1 = w1 * (2.0 * (double(i1) + 0.5) / n1 - 1.0);
    double acc = 0.0;
    for (int i2 = 0; i2 < n23; ++i2) {
      const double t2v = w23 * (2.0 * (double(i2) + 0.5) / n23 - 1.0);
      for (int i3 = 0; i3 < n23; ++i3) {
        const double t3v = w23 * (2.0 * (double(i3) + 0.5) / n23 - 1.0);
        CVec q0 = x + Complex(t1) * b1 + Complex(t2v) * t2 + Complex(t3v) * b3;
        double lo = 0.0, hi = 0.0;
        bool found = false;
        double prev_s = -0.3, prev_v = d.rho(q0 + Complex(0.3) * nu);
        for (int k = 1; k <= 16 && !found; ++k) {
          const double s = -0.3 + 1.2 * k / 16;
          const double v = d.rho(q0 + Complex(-s) * nu);
          if (prev_v >= 0.0 && v < 0.0) {
            lo = prev_s;
            hi = s;
            found = true;
          }
          prev_s = s;
          prev_v = v;
        }
        if (!found) continue;
        for (int k = 0; k < 40; ++k) {
          const double mid = 0.5 * (lo + hi);
          (d.rho(q0 + Complex(-mid) * nu) >= 0.0 ? lo : hi) = mid;
        }
        const double s = 0.5 * (lo + hi);
        const CVec z = q0 + Complex(-s) * nu;
        if (!in_window(z)) continue;
        const CVec g = d.gradient_zbar(z);
        const double denom = real_dot(g, nu);
        if (std::abs(denom) < 1e-10) continue;
        const double g1 = real_dot(g, b1) / denom;
        const double g2 = real_dot(g, t2) / denom;
        const double g3 = real_dot(g, b3) / denom;
        acc += std::sqrt(1.0 + g1 * g1 + g2 * g2 + g3 * g3);
      }
    }
    slices[i1] = acc;
  });
  double area = 0.0;
  for (double s : slices) area += s;
  area *= (2.0 * w1 / n1) * (2.0 * w23 / n23) * (2.0 * w23 / n23);
  out.boundary_area = area;
  out.ratio = area / out.surrogate_inverse;

  if (pack) {
    for (const PackedPoint& pt : pack->points) {
      if (in_window(pt.a)) out.packing_mass += std::pow(pt.r, 1.0 + 2.0 * pt.mu);
    }
  }
  return out;
}

double pseudo_distance(const Domain& d, const CVec& x, const CVec& y) {
  require_boundary(d, x, "separation base point");
  require_boundary(d, y, "separation target point");
  const BoundaryFrame frame = tangent_frame(d, x);
  const CVec diff = y + Complex(-1.0) * x;
  std::vector<double> coords;
  coords.push_back(std::abs(hdot(diff, frame.normal)));
  for (const CVec& t : frame.tangents) coords.push_back(std::abs(hdot(diff, t)));

  auto outside = [&](double delta) {
    const PseudoBall b = pseudo_ball(d, x, delta);
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (coords[j] > b.taus[j]) return true;
    }
    return false;
  };
  const double lo = 1e-6, hi = 16.0;
  if (!outside(lo)) return lo;
  if (outside(hi)) throw NumericError("the points never share a pseudo-ball");
  return bisect_largest(outside, lo, hi, 1e-6);
}

double pseudo_distance_star(const Domain& d, const CVec& z, const CVec& w) {
  const double rz = boundary_distance(d, z);
  const double rw = boundary_distance(d, w);
  const CVec fz = project_to_boundary(d, z).point;
  const CVec fw = project_to_boundary(d, w).point;
  return std::abs(rz) + std::abs(rw) + pseudo_distance(d, fz, fw);
}

}  // namespace pclab
