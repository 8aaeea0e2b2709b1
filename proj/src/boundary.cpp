#include "pclab/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "pclab/errors.hpp"
#include "pclab/rng.hpp"

namespace pclab {
namespace {

constexpr double kLevelTol = 1e-12;
constexpr double kParallelTol = 1e-8;

// Largest |z_1| compatible with |z_2|^2 = u on the model boundaries.
double profile_radius(const Domain& d, double u) {
  switch (d.kind()) {
    case DomainKind::UnitBall:
      return std::sqrt(1.0 - u);
    case DomainKind::Egg: {
      int m1 = d.exponents()[0], m2 = d.exponents()[1];
      return std::pow(1.0 - std::pow(u, m2), 1.0 / (2.0 * m1));
    }
    case DomainKind::ExpFlat:
      return std::sqrt(1.0 - exp_flat_radial_derivative(0, u));
    default:
      throw InputError("profile_radius: no closed-form profile for this kind");
  }
}

}  // namespace

ProjectionResult project_to_boundary(const Domain& d, const CVec& z) {
  if (int(z.size()) != d.dimension()) throw InputError("project_to_boundary: dimension mismatch");

  if (d.kind() == DomainKind::UnitBall) {
    double r = vnorm(z);
    if (r < 1e-14) {
      CVec p(z.size(), Complex(0.0));
      p[0] = 1.0;
      return {p, 1.0, 0};
    }
    return {Complex(1.0 / r) * z, std::abs(r - 1.0), 0};
  }

  // Land on the level set before chasing the foot point.
  CVec x = z;
  for (int i = 0; i < 60 && std::abs(d.rho(x)) > kLevelTol; ++i) {
    CVec g = d.gradient_zbar(x);
    double gn2 = norm2(g);
    if (gn2 < 1e-24) throw CollarError("projection stalled at a critical point");
    x = x - Complex(d.rho(x) / (2.0 * gn2)) * g;
  }
  if (std::abs(d.rho(x)) > 1e-8) throw CollarError("projection could not reach the boundary");

  for (int outer = 1; outer <= 100; ++outer) {
    CVec g = d.gradient_zbar(x);
    double gn = vnorm(g);
    if (gn < 1e-12) throw CollarError("projection stalled at a critical point");
    CVec nh = Complex(1.0 / gn) * g;

    // One-dimensional Newton for rho = 0 along z + s nh.
    double s = real_dot(x - z, nh);
    bool landed = false;
    for (int it = 0; it < 60; ++it) {
      CVec y = z + Complex(s) * nh;
      double f = d.rho(y);
      if (std::abs(f) <= kLevelTol) {
        landed = true;
        break;
      }
      double fp = 2.0 * real_dot(d.gradient_zbar(y), nh);
      if (std::abs(fp) < 1e-18) break;
      s -= f / fp;
    }
    if (!landed) throw CollarError("projection ray left the collar of the boundary");
    x = z + Complex(s) * nh;

    CVec gx = d.gradient_zbar(x);
    double gxn = vnorm(gx);
    if (gxn < 1e-12) throw CollarError("projection stalled at a critical point");
    CVec nx = Complex(1.0 / gxn) * gx;
    CVec diff = z - x;
    double dist = vnorm(diff);
    if (dist < 1e-14) return {x, 0.0, outer};
    CVec tang = diff - Complex(real_dot(diff, nx)) * nx;
    if (vnorm(tang) / dist < kParallelTol) return {x, dist, outer};
  }
  throw CollarError("projection did not converge, point is outside the stable collar");
}

double boundary_distance(const Domain& d, const CVec& z) {
  ProjectionResult p = project_to_boundary(d, z);
  return d.rho(z) < 0.0 ? p.distance : -p.distance;
}

CVec outward_normal(const Domain& d, const CVec& p) {
  CVec g = d.gradient_zbar(p);
  double gn = vnorm(g);
  if (gn < 1e-12) throw NumericError("outward_normal: gradient vanishes at this point");
  return Complex(1.0 / gn) * g;
}

BoundaryFrame tangent_frame(const Domain& d, const CVec& p) {
  int n = d.dimension();
  BoundaryFrame frame;
  frame.normal = outward_normal(d, p);

  // Drop the coordinate axis most aligned with the normal, then orthonormalize
  // the remaining axes against the growing frame. A second pass tightens the
  // orthogonality lost to rounding.
  int drop = 0;
  double best = -1.0;
  for (int k = 0; k < n; ++k) {
    double mag = std::abs(frame.normal[std::size_t(k)]);
    if (mag > best + 1e-15) {
      best = mag;
      drop = k;
    }
  }
  std::vector<CVec> basis{frame.normal};
  for (int j = 0; j < n; ++j) {
    if (j == drop) continue;
    CVec v(std::size_t(n), Complex(0.0));
    v[std::size_t(j)] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const CVec& b : basis) v = v - hdot(v, b) * b;
    double vn = vnorm(v);
    if (vn < 1e-10) throw NumericError("tangent_frame: degenerate Gram-Schmidt step");
    v = Complex(1.0 / vn) * v;
    basis.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(hdot(basis[i], basis[j])) > 1e-10)
        throw NumericError("tangent_frame: frame failed the orthogonality check");
  frame.tangents.assign(basis.begin() + 1, basis.end());
  return frame;
}

std::vector<CVec> boundary_sample(const Domain& d, int resolution, std::uint64_t seed) {
  if (resolution < 2) throw InputError("boundary_sample: resolution must be at least 2");
  int n = d.dimension();
  std::vector<CVec> points;
  points.reserve(std::size_t(resolution) * resolution);

  bool gridded = n == 2 && d.kind() != DomainKind::GeneralPolynomial;
  if (gridded) {
    const double ucap = 0.95;
    for (int j = 0; j < resolution; ++j) {
      double u = ucap * double(j) / double(resolution - 1);
      double r2 = std::sqrt(u);
      double r1 = profile_radius(d, u);
      for (int i = 0; i < resolution; ++i) {
        double phi = 2.0 * M_PI * double(i) / double(resolution);
        points.push_back({Complex(r1 * std::cos(phi), r1 * std::sin(phi)), Complex(r2, 0.0)});
      }
    }
    return points;
  }

  CVec origin(std::size_t(n), Complex(0.0));
  if (d.rho(origin) >= 0.0)
    throw InputError("boundary_sample: the origin must be strictly inside the domain");
  int count = resolution * resolution;
  for (int idx = 0; idx < count; ++idx) {
    CVec v = quasi_complex_direction(std::uint64_t(idx) + 1, n, seed);
    double hi = 1.0;
    while (d.rho(Complex(hi) * v) < 0.0) {
      hi *= 2.0;
      if (hi > 1e3) throw NumericError("boundary_sample: ray never left the domain");
    }
    double lo = 0.0;
    while (hi - lo > 1e-13) {
      double mid = 0.5 * (lo + hi);
      (d.rho(Complex(mid) * v) < 0.0 ? lo : hi) = mid;
    }
    points.push_back(Complex(0.5 * (lo + hi)) * v);
  }
  return points;
}

}  // namespace pclab
