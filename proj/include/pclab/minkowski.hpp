#pragma once

#include <vector>

#include "pclab/domain.hpp"
#include "pclab/linalg.hpp"

namespace pclab {

using RVec = std::vector<double>;

// Occupied cells of the axis-aligned grid of pitch eps covering the points.
// shift_frac moves the grid origin by that fraction of a cell on every axis.
int box_count(const std::vector<RVec>& points, double eps, double shift_frac = 0.0);

struct BoxCountReport {
  std::vector<double> eps;  // geometric ladder, largest first
  std::vector<int> counts;
  double dimension = 0.0;
  int fit_count = 0;    // leading rungs admitted into the fit
  double residual = 0.0;
  double pitch = 0.0;   // median nearest-neighbor distance of the sample
};

// Log-log slope of the box counts over the admissible rungs. A rung is
// admissible when the sampling pitch is below eps / 4, so the estimator
// never resolves the finite sample itself; fewer than 4 admissible rungs is
// an error. The slope is clamped to [0, ambient dimension].
BoxCountReport dim_estimate(const std::vector<RVec>& points, double eps_max, double eps_min,
                            int rungs, double shift_frac = 0.0);

// C^n points flattened to R^(2n).
std::vector<RVec> embed_complex(const std::vector<CVec>& points);

struct SliceResult {
  std::vector<RVec> coords;  // (s, t) grid coordinates that landed weak
  int attempted = 0;
  int failures = 0;  // projections that did not settle
};

// Scans the complex line alpha + (s + it) L_j in the tangent space (other
// tangent coordinates held at the given offsets), s and t over a grid of the
// given half-width, projects each point to the boundary along the normal
// flow, and keeps the grid coordinates whose landing classifies weak at the
// given absolute tolerance. A strict base point simply produces an empty
// slice. direction_index is 2..n, selecting the tangent frame vector.
SliceResult slice_weak_set(const Domain& d, const CVec& alpha, int direction_index,
                           const std::vector<Complex>& offsets, double window, int resolution,
                           double tol);

// Dimension gap exponent reported for a slice: 2 - dim, floored at 0.
double strong_beta(double slice_dimension);

// Best exponent h with |f(x) - f(y)| <= C |x - y|^h for equally spaced
// samples, from the log-log fit of dyadic-lag increments. A constant
// function returns 1 by convention (every exponent fits).
double holder_exponent(const std::vector<double>& samples);

}  // namespace pclab
