#include "pclab/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pclab/boundary.hpp"
#include "pclab/errors.hpp"
#include "pclab/rng.hpp"

namespace pclab {

namespace {

// Tangent polydiscs count as disjoint: the discs are open, and the layered
// construction places consecutive layers exactly at touching distance.
constexpr double kTouchSlack = 1e-9;

double radius_sum(const Polydisc& p) {
  return std::accumulate(p.radii.begin(), p.radii.end(), 0.0);
}

// Shared greedy accumulator; try_add projects the candidate, builds its
// polydisc, and accepts it when disjoint from everything accepted so far.
struct Accumulator {
  const Domain& d;
  const GoodFamily& family;
  double delta;
  PackingResult res;
  std::vector<double> bounds;

  Accumulator(const Domain& dom, const GoodFamily& fam, double dlt) : d(dom), family(fam), delta(dlt) {
    res.delta = dlt;
    res.nu = (1.0 - dlt) / (1.0 + dlt);
  }

  bool try_add(const CVec& a, int layer) {
    Polydisc cand;
    try {
      cand = make_polydisc(d, family.field, a, delta);
    } catch (const CollarError&) {
      return false;
    } catch (const InputError&) {
      return false;
    }
    const double bound = radius_sum(cand);
    for (std::size_t i = 0; i < res.discs.size(); ++i) {
      const double dist = vnorm(cand.center - res.discs[i].center);
      if (dist > bound + bounds[i]) continue;
      if (!polydiscs_disjoint(cand, res.discs[i])) return false;
    }
    PackedPoint pp;
    pp.a = a;
    pp.r = boundary_distance(d, a);
    pp.mu = mu_sum(cand.weight);
    pp.layer = layer;
    res.points.push_back(std::move(pp));
    bounds.push_back(bound);
    res.discs.push_back(std::move(cand));
    return true;
  }
};

void check_delta(const GoodFamily& family, double delta) {
  if (delta <= 0.0) throw InputError("packing delta must be positive");
  if (delta > family.delta0 * (1.0 + 1e-9)) {
    throw InputError("packing delta exceeds the family scale delta0");
  }
}

PackingResult layered_candidates(const Domain& d, const GoodFamily& family, double delta,
                                 const WeakSetSample& w, double gamma0, int layers, int budget) {
  if (layers < 0) throw InputError("layer count is negative");
  if (w.points.empty()) throw InputError("packing target set is empty");
  if (gamma0 <= 0.0 || gamma0 >= 0.25) {
    throw InputError("base layer depth must sit strictly inside the collar");
  }

  Accumulator acc(d, family, delta);
  std::vector<CVec> normals;
  normals.reserve(w.points.size());
  for (const CVec& alpha : w.points) normals.push_back(outward_normal(d, alpha));

  const double nu = acc.res.nu;
  double gamma = gamma0;
  for (int k = 0; k < layers; ++k) {
    for (std::size_t i = 0; i < w.points.size(); ++i) {
      if (budget > 0 && static_cast<int>(acc.res.points.size()) >= budget) return acc.res;
      acc.try_add(w.points[i] - Complex(gamma) * normals[i], k);
    }
    gamma *= nu;
  }
  return acc.res;
}

}  // namespace

double support_radius(const Polydisc& p, const CVec& u) {
  double h = p.radii[0] * std::abs(hdot(u, p.frame.normal));
  for (std::size_t j = 0; j < p.frame.tangents.size(); ++j) {
    h += p.radii[j + 1] * std::abs(hdot(u, p.frame.tangents[j]));
  }
  return h;
}

bool polydiscs_disjoint(const Polydisc& a, const Polydisc& b) {
  const CVec diff = b.center - a.center;
  const double dist = vnorm(diff);
  if (dist <= 0.0) return false;
  const CVec u = (1.0 / dist) * diff;
  return dist >= (1.0 - kTouchSlack) * (support_radius(a, u) + support_radius(b, u));
}

PackTarget PackTarget::whole_collar() { return PackTarget{}; }

PackTarget PackTarget::above_weak_set(WeakSetSample w) {
  PackTarget t;
  t.kind = Kind::AboveWeakSet;
  t.weak = std::move(w);
  return t;
}

PackTarget PackTarget::on_divisor(std::vector<CVec> sites) {
  PackTarget t;
  t.kind = Kind::OnDivisor;
  t.sites = std::move(sites);
  return t;
}

PackingResult greedy_pack(const Domain& d, const GoodFamily& family, double delta,
                          const PackTarget& target, int budget, std::uint64_t seed) {
  check_delta(family, delta);
  if (budget <= 0) throw InputError("packing budget must be positive");

  if (target.kind == PackTarget::Kind::AboveWeakSet) {
    return layered_candidates(d, family, delta, target.weak, 0.1, 12, budget);
  }

  Accumulator acc(d, family, delta);
  if (target.kind == PackTarget::Kind::OnDivisor) {
    if (target.sites.empty()) throw InputError("packing target set is empty");
    for (const CVec& site : target.sites) {
      if (static_cast<int>(acc.res.points.size()) >= budget) break;
      acc.try_add(site, 0);
    }
    return acc.res;
  }

  const std::vector<CVec> bpts = boundary_sample(d, 16, seed);
  std::vector<CVec> normals;
  normals.reserve(bpts.size());
  for (const CVec& alpha : bpts) normals.push_back(outward_normal(d, alpha));

  const std::size_t cap = static_cast<std::size_t>(budget) * 16 + 1024;
  for (std::size_t idx = 0; idx < cap; ++idx) {
    if (static_cast<int>(acc.res.points.size()) >= budget) break;
    const std::size_t i = idx % bpts.size();
    const double t = 0.25 * (0.02 + 0.98 * halton_point(idx, 1, seed + 1)[0]);
    acc.try_add(bpts[i] - Complex(t) * normals[i], 0);
  }
  return acc.res;
}

PackingResult layered_pack(const Domain& d, const GoodFamily& family, double delta,
                           const WeakSetSample& w, double gamma0, int layers) {
  check_delta(family, delta);
  return layered_candidates(d, family, delta, w, gamma0, layers, 0);
}

bool verify_disjoint(const PackingResult& p) {
  for (std::size_t i = 0; i < p.discs.size(); ++i) {
    for (std::size_t j = i + 1; j < p.discs.size(); ++j) {
      if (!polydiscs_disjoint(p.discs[i], p.discs[j])) return false;
    }
  }
  return true;
}

TheoremSum theorem_sum(const PackingResult& p, SumRule rule, double beta, int mn) {
  TheoremSum out;
  out.rule = rule;
  if (beta > 0.0 && mn > 0) out.predicted_ratio = std::pow(p.nu, beta / mn);
  if (p.points.empty()) return out;

  int top_layer = 0;
  for (const PackedPoint& pp : p.points) top_layer = std::max(top_layer, pp.layer);
  std::vector<double> layer_sums(static_cast<std::size_t>(top_layer) + 1, 0.0);
  for (const PackedPoint& pp : p.points) {
    const double e =
        rule == SumRule::PowerN ? static_cast<double>(pp.a.size()) : 1.0 + 2.0 * pp.mu;
    layer_sums[static_cast<std::size_t>(pp.layer)] += std::pow(pp.r, e);
  }

  double running = 0.0;
  for (double s : layer_sums) {
    running += s;
    out.layer_partials.push_back(running);
  }
  out.total = running;

  std::vector<double> ks;
  std::vector<double> logs;
  for (std::size_t k = 0; k < layer_sums.size(); ++k) {
    if (layer_sums[k] > 0.0) {
      ks.push_back(static_cast<double>(k));
      logs.push_back(std::log(layer_sums[k]));
    }
  }
  if (ks.size() >= 2) out.ratio_fit = std::exp(fit_line(ks, logs).slope);
  if (out.predicted_ratio > 0.0 && out.ratio_fit > 0.0) {
    out.ratio_within_bound = out.ratio_fit <= out.predicted_ratio * 1.1;
  }
  return out;
}

PackingLemmaReport packing_lemma_check(const std::vector<CVec>& slice_points, double l,
                                       double alpha_prime, const std::vector<double>& r_ladder) {
  if (l <= 0.0) throw InputError("tangential radius factor must be positive");
  if (alpha_prime <= 0.0) throw InputError("area growth exponent must be positive");
  if (r_ladder.empty()) throw InputError("radius ladder is empty");
  for (double r : r_ladder) {
    if (r <= 0.0) throw InputError("radius ladder entries must be positive");
  }

  PackingLemmaReport out;
  const std::size_t n = slice_points.empty() ? 0 : slice_points.front().size();
  for (double r : r_ladder) {
    std::vector<double> radii(n, l * r);
    if (n > 0) radii[0] = r;

    std::vector<CVec> accepted;
    for (const CVec& cand : slice_points) {
      bool ok = true;
      for (const CVec& b : accepted) {
        bool separated = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (std::abs(cand[j] - b[j]) >= 2.0 * radii[j] * (1.0 - kTouchSlack)) {
            separated = true;
            break;
          }
        }
        if (!separated) {
          ok = false;
          break;
        }
      }
      if (ok) accepted.push_back(cand);
    }

    double area = 1.0;
    for (std::size_t j = 0; j < n; ++j) area *= M_PI * radii[j] * radii[j];
    out.r_values.push_back(r);
    out.counts.push_back(static_cast<int>(accepted.size()));
    out.areas.push_back(accepted.empty() ? 0.0 : area * static_cast<double>(accepted.size()));
  }

  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < out.r_values.size(); ++i) {
    if (out.areas[i] > 0.0) {
      lx.push_back(std::log(out.r_values[i]));
      ly.push_back(std::log(out.areas[i]));
    }
  }
  if (lx.size() >= 2) out.slope = fit_line(lx, ly).slope;
  out.bound_ok = out.slope >= alpha_prime;
  return out;
}

}  // namespace pclab
