#pragma once

#include <cstdint>
#include <vector>

#include "pclab/boundary.hpp"
#include "pclab/domain.hpp"
#include "pclab/linalg.hpp"
#include "pclab/packing.hpp"
#include "pclab/polydisc.hpp"

namespace pclab {

// Extremal radius along a unit direction at a boundary point: the largest t,
// found by bisection to 1e-8, such that |rho| stays within delta on the
// complex line segment x + lambda e with |lambda| <= t, sampled on 32
// phases. The search caps at the domain diameter scale.
double tau(const Domain& d, const CVec& x, const CVec& e, double delta);

struct PseudoBall {
  CVec center;
  double delta = 0.0;
  std::vector<double> taus;  // per frame axis, normal first
  double sigma = 0.0;        // delta times the squared tangential radii
  double tent = 0.0;         // delta times sigma, by construction
};

PseudoBall pseudo_ball(const Domain& d, const CVec& x, double delta);

// True iff sigma(B(x, delta)) <= sigma(B(x, N delta)) / 2, the volume
// doubling property of the anisotropic radii.
bool doubling_check(const Domain& d, const CVec& x, double delta, int n);

// Reciprocal conjugate-power of the pseudo-ball volume at the projection of
// a collar point a with delta = its boundary distance: sigma^(-1/p'),
// the surrogate for the reproducing-kernel norm in H^p. p may be infinity;
// p = 1 gives 1 by the conjugate convention.
double surrogate_kernel_norm(const Domain& d, const CVec& a, double p);

// Structural exponent identities of the surrogate norms. With values given
// by powers of one sigma these are exact; each check asserts the identity
// to 1e-10 relative and reports the two sides.
bool sh_check(const Domain& d, const CVec& a, double q);
bool sh_check2(const Domain& d, const CVec& a, double p, double q, double s);

// (1 + 1/(1 - 2^(1-p)))^(1/p), cross-checked against the partial geometric
// series before returning. Diverges as p -> 1.
double cp_constant(double p);

struct CarlesonWindow {
  double boundary_area = 0.0;      // area of the boundary patch inside P_a(2)
  double surrogate_inverse = 0.0;  // reciprocal of the surrogate norm at p
  double ratio = 0.0;              // boundary_area divided by surrogate_inverse
  double packing_mass = 0.0;       // sum of r^(1 + 2 mu) over centers in the window
  bool out_of_collar = false;
};

// Boundary area of the window patch cut by the doubled polydisc at a,
// measured by graph quadrature over the tangent hyperplane, paired with the
// surrogate norm at exponent p. An optional packing contributes the mass of
// its centers lying in the window. Two complex dimensions only.
CarlesonWindow carleson_window_data(const Domain& d, const GoodFamily& f, const CVec& a,
                                    double p, const PackingResult* pack = nullptr);

// Anisotropic boundary separation: the smallest delta whose pseudo-ball at
// x captures y, by bisection over the monotone radii.
double pseudo_distance(const Domain& d, const CVec& x, const CVec& y);

// Collar extension of the separation: boundary distances of both points
// plus the separation of their projections. Reported for inspection; no
// check consumes it.
double pseudo_distance_star(const Domain& d, const CVec& z, const CVec& w);

}  // namespace pclab
