#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "pclab/boundary.hpp"
#include "pclab/domain.hpp"
#include "pclab/multitype.hpp"

namespace pclab {

// Anisotropic polydisc attached to an interior point a: radius delta * r(a)
// along the normal and delta * r(a)^(1/m_j) along the tangential frame
// directions, where r(a) is the distance to the boundary and (m_j) the
// weight resolved at the boundary projection of a.
struct Polydisc {
  CVec center;
  BoundaryFrame frame;
  std::vector<double> radii;
  double delta = 0.0;
  Weight weight;
};

// Discretized weight assignment over a boundary sample.
struct MultitypeField {
  std::vector<CVec> points;
  std::vector<Weight> weights;
};

struct GoodFamily {
  Domain domain;
  MultitypeField field;
  double delta0 = 0.0;
};

// Field with the minimal weight (1, 2, ..., 2) at every sampled point.
MultitypeField minimal_field(const Domain& d, int res);

// Field with weights computed by the greedy multitype search per point.
MultitypeField computed_field(const Domain& d, int res, const MultitypeOptions& opt = {});

// Field assigning one fixed weight everywhere (used to probe wrong
// assignments deliberately).
MultitypeField forced_field(const Domain& d, int res, Weight w);

// Index of the sampled boundary point nearest to p.
std::size_t nearest_field_index(const MultitypeField& f, const CVec& p);

// Polydisc at interior point a with the weight of the nearest field sample.
Polydisc make_polydisc(const Domain& d, const MultitypeField& f, const CVec& a, double delta);

// True iff rho < 0 at every sample of the distinguished boundary and the
// interior radial grid of P. samples_per_face counts phases per disc.
bool polydisc_contains(const Domain& d, const Polydisc& p, int samples_per_face = 16);

// Geometric ladder of normal depths 0.25, 0.125, ..., 0.25/128.
std::vector<double> default_normal_depths();

// Largest delta in (0, 2] (1e-3 resolution) whose polydiscs at all ladder
// points below all field samples stay inside the domain.
double find_delta0(const Domain& d, const MultitypeField& f,
                   const std::vector<double>& normal_depths = default_normal_depths(),
                   int samples_per_face = 8);

GoodFamily build_good_family(const Domain& d, MultitypeField f, int samples_per_face = 8);

// mu(a) = sum_{j>=2} 1/m_j and mu_j(a) = sum_{k!=j} 1/m_k for the resolved
// weight of the polydisc.
double polydisc_mu(const Polydisc& p);
double polydisc_mu_complement(const Polydisc& p, int j);

nlohmann::json family_to_json(const GoodFamily& g);
GoodFamily family_from_json(const nlohmann::json& j);

}  // namespace pclab
