#pragma once

#include <cstdint>
#include <vector>

#include "pclab/domain.hpp"
#include "pclab/levi.hpp"
#include "pclab/polydisc.hpp"

namespace pclab {

// Largest reach of the polydisc in direction u: sum of the directional radii
// along the frame axes. Two polydiscs are certified disjoint when their
// center distance exceeds the summed support radii along the center line;
// the test is conservative for rotated anisotropic boxes.
double support_radius(const Polydisc& p, const CVec& u);
bool polydiscs_disjoint(const Polydisc& a, const Polydisc& b);

struct PackTarget {
  enum class Kind { WholeCollar, AboveWeakSet, OnDivisor };
  Kind kind = Kind::WholeCollar;
  WeakSetSample weak;       // AboveWeakSet: boundary points to lift inward
  std::vector<CVec> sites;  // OnDivisor: interior candidate centers

  static PackTarget whole_collar();
  static PackTarget above_weak_set(WeakSetSample w);
  static PackTarget on_divisor(std::vector<CVec> sites);
};

struct PackedPoint {
  CVec a;
  double r = 0.0;   // boundary distance of the center
  double mu = 0.0;  // tangential exponent sum of the resolved weight
  int layer = 0;
};

struct PackingResult {
  std::vector<PackedPoint> points;
  std::vector<Polydisc> discs;
  double delta = 0.0;
  double nu = 0.0;  // (1 - delta) / (1 + delta)
};

// Greedy separated sequence: candidates are streamed deterministically from
// the target description and accepted when their polydisc is disjoint from
// every accepted one. Stops at budget accepted points or stream exhaustion.
PackingResult greedy_pack(const Domain& d, const GoodFamily& family, double delta,
                          const PackTarget& target, int budget, std::uint64_t seed);

// Layer-by-layer pack over a weak-set sample: layer k lifts every sampled
// point inward by gamma_k = nu^k gamma0 along the normal.
PackingResult layered_pack(const Domain& d, const GoodFamily& family, double delta,
                           const WeakSetSample& w, double gamma0, int layers);

// Full pairwise certification pass over an existing packing.
bool verify_disjoint(const PackingResult& p);

enum class SumRule { OnePlusTwoMu, PowerN };

struct TheoremSum {
  SumRule rule = SumRule::OnePlusTwoMu;
  std::vector<double> layer_partials;  // cumulative totals through each layer
  double total = 0.0;
  double ratio_fit = 0.0;       // fitted geometric ratio of per-layer sums
  double predicted_ratio = 0.0; // nu^(beta/mn) when beta and mn are given
  bool ratio_within_bound = true;
};

// Sum of r(a)^e over the packing with e = 1 + 2 mu(a) or e = n, with
// cumulative layer partials and a geometric fit of the per-layer decay.
// Passing beta > 0 and mn > 0 adds the predicted ratio comparison.
TheoremSum theorem_sum(const PackingResult& p, SumRule rule, double beta = 0.0, int mn = 0);

struct PackingLemmaReport {
  std::vector<double> r_values;
  std::vector<double> areas;  // total polydisc area per ladder radius
  std::vector<int> counts;
  double slope = 0.0;  // log total area versus log r
  bool bound_ok = false;
};

// Axis-aligned polydiscs of radii (r, l r, ..., l r) centered on a greedily
// thinned disjoint subset of the given points, over a ladder of r values;
// fits the area growth exponent and checks slope >= alpha_prime. Coordinate
// discs touching exactly count as disjoint.
PackingLemmaReport packing_lemma_check(const std::vector<CVec>& slice_points, double l,
                                       double alpha_prime, const std::vector<double>& r_ladder);

}  // namespace pclab
