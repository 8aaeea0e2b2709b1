#pragma once

#include <cstdint>
#include <vector>

#include "pclab/domain.hpp"
#include "pclab/linalg.hpp"

namespace pclab {

struct ProjectionResult {
  CVec point;          // closest boundary point
  double distance;     // Euclidean distance |z - point|
  int iterations = 0;  // outer fixed-point iterations used
};

// Closest boundary point to z. Newton onto the level set, then a fixed-point
// loop that re-shoots along the local normal until z - point is parallel to
// it. Throws CollarError when the iteration does not settle, which happens
// for points too far from the boundary to have a stable nearest point.
ProjectionResult project_to_boundary(const Domain& d, const CVec& z);

// Signed distance to the complement: positive inside the domain, negative
// outside, zero on the boundary.
double boundary_distance(const Domain& d, const CVec& z);

// Unit outward normal in complex representation, g / |g| with g the
// zbar-gradient.
CVec outward_normal(const Domain& d, const CVec& p);

struct BoundaryFrame {
  CVec normal;                 // first frame vector, the unit normal
  std::vector<CVec> tangents;  // Hermitian-orthonormal complex tangent basis
};

// Hermitian-orthonormal frame at a boundary point: the normal plus the n - 1
// complex tangent directions. Built with Gram-Schmidt against the coordinate
// axes, dropping the axis most aligned with the normal.
BoundaryFrame tangent_frame(const Domain& d, const CVec& p);

// Deterministic boundary point cloud. Two-dimensional model kinds use a
// structured grid: phase circle in z_1 times a z_2 profile uniform in
// |z_2|^2, which weights rungs by area measure. Other kinds shoot
// quasi-random rays from the origin, which must be interior.
std::vector<CVec> boundary_sample(const Domain& d, int resolution, std::uint64_t seed);

}  // namespace pclab
