#include "pclab/levi.hpp"

#include <algorithm>
#include <cmath>

#include "pclab/errors.hpp"
#include "pclab/multi_index.hpp"
#include "pclab/parallel.hpp"

namespace pclab {

LeviMatrix levi_matrix(const Domain& d, const CVec& p, const BoundaryFrame& frame) {
  int n = d.dimension();
  if (n < 2) throw InputError("levi_matrix: needs a complex tangent space, dimension >= 2");
  CMat hess = d.complex_hessian(p);
  CMat levi(n - 1);
  for (int j = 0; j < n - 1; ++j)
    for (int k = 0; k < n - 1; ++k) {
      Complex sum(0.0);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          sum += hess.at(r, c) * frame.tangents[std::size_t(j)][std::size_t(r)] *
                 std::conj(frame.tangents[std::size_t(k)][std::size_t(c)]);
      levi.at(j, k) = sum;
    }
  double scale = 0.0;
  for (const Complex& v : levi.data) scale = std::max(scale, std::abs(v));
  for (int j = 0; j < n - 1; ++j)
    for (int k = 0; k < n - 1; ++k)
      if (std::abs(levi.at(j, k) - std::conj(levi.at(k, j))) > 1e-10 * std::max(scale, 1.0))
        throw NumericError("levi_matrix: matrix is not Hermitian within tolerance");
  return {frame, std::move(levi)};
}

LeviMatrix levi_matrix(const Domain& d, const CVec& p) {
  return levi_matrix(d, p, tangent_frame(d, p));
}

double levi_determinant(const Domain& d, const CVec& p) {
  LeviMatrix lm = levi_matrix(d, p);
  Complex dd = det(lm.entries);
  if (std::abs(dd.imag()) > 1e-8 * std::max(1.0, std::abs(dd.real())))
    throw NumericError("levi_determinant: imaginary residue above tolerance");
  return dd.real();
}

const char* point_class_name(PointClass c) { return c == PointClass::Strict ? "strict" : "weak"; }

double levi_scale(const Domain& d, int coarse_resolution, std::uint64_t seed) {
  std::vector<CVec> pts = boundary_sample(d, coarse_resolution, seed);
  std::vector<double> dets(pts.size(), 0.0);
  parallel_for(pts.size(), [&](std::size_t i) { dets[i] = levi_determinant(d, pts[i]); });
  double m = 0.0;
  for (double v : dets) m = std::max(m, std::abs(v));
  return m;
}

double default_weak_tol(const Domain& d, double tol_rel, std::uint64_t seed) {
  return tol_rel * levi_scale(d, 24, seed);
}

PointClass classify_point(const Domain& d, const CVec& p, double tol) {
  double dd = levi_determinant(d, p);
  if (std::abs(dd) <= tol) return PointClass::Weak;
  if (dd < 0.0) throw NumericError("classify_point: boundary point is not pseudoconvex");
  return PointClass::Strict;
}

WeakSetSample weak_set_sample(const Domain& d, int resolution, double tol, std::uint64_t seed) {
  if (resolution < 8) throw InputError("weak_set_sample: resolution must be at least 8");
  WeakSetSample out;
  out.tol = tol;
  out.all_points = boundary_sample(d, resolution, seed);
  out.total_sampled = int(out.all_points.size());
  out.all_dets.assign(out.all_points.size(), 0.0);
  parallel_for(out.all_points.size(),
               [&](std::size_t i) { out.all_dets[i] = levi_determinant(d, out.all_points[i]); });
  for (std::size_t i = 0; i < out.all_points.size(); ++i)
    if (std::abs(out.all_dets[i]) <= out.tol) out.points.push_back(out.all_points[i]);
  // The model grids advance the phase circle and the |z_2|^2 profile in
  // resolution steps over ranges of order one.
  out.grid_spacing = 2.0 * M_PI / double(resolution);
  return out;
}

NonflatnessResult nonflatness_order(const std::function<double(double)>& f, int kmax,
                                    double step) {
  if (kmax < 0) throw InputError("nonflatness_order: negative order cap");
  const double detect = 1e-6;

  double f0 = f(0.0);
  if (std::abs(f0) > detect) return {false, 0, f0};

  for (int k = 1; k <= kmax; ++k) {
    // Central difference with half-integer offsets: sum (-1)^i C(k,i) f((k/2-i)h) / h^k.
    double fmax = 0.0;
    auto stencil = [&](double h) {
      double sum = 0.0;
      for (int i = 0; i <= k; ++i) {
        double fv = f((0.5 * k - i) * h);
        fmax = std::max(fmax, std::abs(fv));
        sum += ((i % 2 == 0) ? 1.0 : -1.0) * binomial(k, i) * fv;
      }
      return sum / std::pow(h, k);
    };
    double coarse = stencil(step);
    double fine = stencil(0.5 * step);
    double value = (4.0 * fine - coarse) / 3.0;
    double noise = 1e-13 * std::pow(2.0, k) * fmax / std::pow(0.5 * step, k);
    if (std::abs(value) > std::max(detect, 10.0 * noise)) return {false, k, value};
  }
  return {true, -1, 0.0};
}

NonflatnessResult nonflatness_order(const Domain& d, const CVec& p, const CVec& v, int kmax) {
  CVec nu = outward_normal(d, p);
  if (std::abs(real_dot(v, nu)) > 1e-8)
    throw InputError("nonflatness_order: direction is not tangent to the boundary");
  auto f = [&](double t) {
    CVec q = p + Complex(t) * v;
    return levi_determinant(d, project_to_boundary(d, q).point);
  };
  return nonflatness_order(f, kmax);
}

}  // namespace pclab
