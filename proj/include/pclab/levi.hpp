#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pclab/boundary.hpp"
#include "pclab/domain.hpp"
#include "pclab/linalg.hpp"

namespace pclab {

// Levi form restricted to the complex tangent space at a boundary point:
// (n-1)x(n-1) Hermitian matrix over the frame's tangent vectors.
struct LeviMatrix {
  BoundaryFrame frame;
  CMat entries;
};

LeviMatrix levi_matrix(const Domain& d, const CVec& p, const BoundaryFrame& frame);
LeviMatrix levi_matrix(const Domain& d, const CVec& p);

// Determinant of the tangential Levi form. The imaginary residue must stay
// below 1e-8 (relative) or a NumericError is raised.
double levi_determinant(const Domain& d, const CVec& p);

enum class PointClass { Strict, Weak };
const char* point_class_name(PointClass c);

// Scale for the weak threshold: max |levi determinant| over a coarse
// boundary sample, so tolerances survive rescaling rho.
double levi_scale(const Domain& d, int coarse_resolution = 24, std::uint64_t seed = 1);

// Absolute weak threshold: tol_rel times the coarse-sample determinant scale.
double default_weak_tol(const Domain& d, double tol_rel = 1e-8, std::uint64_t seed = 1);

// Weak iff |det| <= tol. A negative determinant beyond the tolerance means
// the point is not pseudoconvex at all; that raises NumericError since the
// classification is only defined for pseudoconvex boundaries.
PointClass classify_point(const Domain& d, const CVec& p, double tol);

struct WeakSetSample {
  std::vector<CVec> points;       // boundary points classified Weak
  double tol = 0.0;               // absolute threshold used on |det|
  double grid_spacing = 0.0;      // angular step of the sampling grid
  int total_sampled = 0;          // boundary points examined
  std::vector<CVec> all_points;   // every examined point
  std::vector<double> all_dets;   // matching determinants
};

WeakSetSample weak_set_sample(const Domain& d, int resolution, double tol,
                              std::uint64_t seed = 1);

struct NonflatnessResult {
  bool flat = false;
  int order = -1;      // smallest k with a detected nonzero derivative
  double value = 0.0;  // Richardson-extrapolated k-th derivative
};

// Smallest k <= kmax with a nonvanishing k-th derivative of f at 0, by
// central differences with half-integer offsets and one Richardson step.
// The detection threshold is 1e-6, widened by the rounding-noise floor of
// the difference stencil so that high orders cannot fire on noise.
NonflatnessResult nonflatness_order(const std::function<double(double)>& f, int kmax,
                                    double step = 1e-2);

// Same, for the Levi determinant along the boundary curve through p in the
// real tangent direction v (projecting p + t v back to the boundary).
NonflatnessResult nonflatness_order(const Domain& d, const CVec& p, const CVec& v, int kmax);

}  // namespace pclab
