#include "pclab/polydisc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>

#include "pclab/errors.hpp"
#include "pclab/linalg.hpp"
#include "pclab/parallel.hpp"

namespace pclab {

namespace {

constexpr std::uint64_t kFieldSeed = 1;

// rho < 0 over the product grid of phase circles and radial scales taken in
// the given orthonormal frame. Flattened product loop with early exit.
bool contains_raw(const Domain& d, const CVec& center, const std::vector<CVec>& axes,
                  const std::vector<double>& radii, int phases, int radial) {
  const int n = d.dimension();
  const int per_axis = phases * radial;
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(per_axis);

  std::atomic<bool> escaped{false};
  parallel_for(total, [&](std::size_t flat) {
    if (escaped.load(std::memory_order_relaxed)) return;
    CVec z = center;
    std::size_t rest = flat;
    for (int j = 0; j < n; ++j) {
      const int slot = static_cast<int>(rest % per_axis);
      rest /= per_axis;
      const int k = slot % phases;
      const int s = slot / phases;
      const double scale = static_cast<double>(s + 1) / radial;
      const double theta = 2.0 * M_PI * k / phases;
      const Complex w = radii[j] * scale * Complex(std::cos(theta), std::sin(theta));
      z = z + w * axes[j];
    }
    if (d.rho(z) >= 0.0) escaped.store(true, std::memory_order_relaxed);
  });
  return !escaped.load();
}

std::vector<CVec> frame_axes(const BoundaryFrame& f) {
  std::vector<CVec> axes;
  axes.push_back(f.normal);
  for (const CVec& t : f.tangents) axes.push_back(t);
  return axes;
}

std::vector<double> radii_for(double delta, double r, const Weight& w) {
  std::vector<double> radii;
  radii.reserve(w.size());
  for (int m : w) {
    if (m == kInfiniteOrder) {
      throw InputError("weight has an infinite entry; polydisc radii need finite orders");
    }
    radii.push_back(delta * std::pow(r, 1.0 / m));
  }
  return radii;
}

}  // namespace

MultitypeField minimal_field(const Domain& d, int res) {
  MultitypeField f;
  f.points = boundary_sample(d, res, kFieldSeed);
  Weight minimal(static_cast<std::size_t>(d.dimension()), 2);
  minimal[0] = 1;
  f.weights.assign(f.points.size(), minimal);
  return f;
}

MultitypeField computed_field(const Domain& d, int res, const MultitypeOptions& opt) {
  MultitypeField f;
  f.points = boundary_sample(d, res, kFieldSeed);
  f.weights.resize(f.points.size());
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    f.weights[i] = linear_multitype(d, f.points[i], opt).weight;
  }
  return f;
}

MultitypeField forced_field(const Domain& d, int res, Weight w) {
  if (static_cast<int>(w.size()) != d.dimension()) {
    throw InputError("forced weight length does not match the domain dimension");
  }
  MultitypeField f;
  f.points = boundary_sample(d, res, kFieldSeed);
  f.weights.assign(f.points.size(), w);
  return f;
}

std::size_t nearest_field_index(const MultitypeField& f, const CVec& p) {
  if (f.points.empty()) throw InputError("multitype field is empty");
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const double dist = vnorm(p - f.points[i]);
    if (dist < best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

Polydisc make_polydisc(const Domain& d, const MultitypeField& f, const CVec& a, double delta) {
  if (delta < 0.0) throw InputError("polydisc delta is negative");
  const double r = boundary_distance(d, a);
  if (r <= 0.0) throw InputError("polydisc center is not interior");

  Polydisc p;
  p.center = a;
  p.delta = delta;
  const CVec foot = project_to_boundary(d, a).point;
  p.frame = tangent_frame(d, foot);
  p.weight = f.weights[nearest_field_index(f, foot)];
  if (!mu_bounds_ok(p.weight)) {
    throw NumericError("resolved weight violates the mu bounds");
  }
  p.radii = radii_for(delta, r, p.weight);
  return p;
}

bool polydisc_contains(const Domain& d, const Polydisc& p, int samples_per_face) {
  if (p.delta == 0.0) return true;
  const int phases = std::max(8, samples_per_face);
  const int radial = std::max(2, phases / 4);
  return contains_raw(d, p.center, frame_axes(p.frame), p.radii, phases, radial);
}

std::vector<double> default_normal_depths() {
  std::vector<double> depths;
  for (int k = 0; k < 8; ++k) depths.push_back(0.25 / (1 << k));
  return depths;
}

double find_delta0(const Domain& d, const MultitypeField& f,
                   const std::vector<double>& normal_depths, int samples_per_face) {
  if (f.points.empty()) throw InputError("multitype field is empty");
  if (normal_depths.empty()) throw InputError("normal depth ladder is empty");

  struct Site {
    CVec center;
    std::vector<CVec> axes;
    double r = 0.0;
    Weight weight;
  };
  std::vector<Site> sites;
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const CVec& alpha = f.points[i];
    const CVec nu = outward_normal(d, alpha);
    const BoundaryFrame frame = tangent_frame(d, alpha);
    for (double t : normal_depths) {
      Site s;
      s.center = alpha - Complex(t) * nu;
      s.axes = frame_axes(frame);
      s.r = boundary_distance(d, s.center);
      s.weight = f.weights[i];
      if (s.r <= 0.0) throw NumericError("normal depth ladder left the domain");
      sites.push_back(std::move(s));
    }
  }

  const int phases = std::max(8, samples_per_face);
  const int radial = std::max(2, phases / 4);
  auto ok = [&](double delta) {
    for (const Site& s : sites) {
      const std::vector<double> radii = radii_for(delta, s.r, s.weight);
      if (!contains_raw(d, s.center, s.axes, radii, phases, radial)) return false;
    }
    return true;
  };

  const double lo = 1e-3;
  if (!ok(lo)) {
    throw NumericError(
        "no usable polydisc scale of at least 1e-3; the weight assignment is likely wrong");
  }
  return bisect_largest(ok, lo, 2.0, 1e-3);
}

GoodFamily build_good_family(const Domain& d, MultitypeField f, int samples_per_face) {
  GoodFamily g{d, std::move(f), 0.0};
  g.delta0 = find_delta0(g.domain, g.field, default_normal_depths(), samples_per_face);
  return g;
}

double polydisc_mu(const Polydisc& p) { return mu_sum(p.weight); }

double polydisc_mu_complement(const Polydisc& p, int j) { return mu_complement(p.weight, j); }

nlohmann::json family_to_json(const GoodFamily& g) {
  nlohmann::json j;
  j["domain"] = g.domain.to_json();
  j["delta0"] = g.delta0;
  auto& pts = j["points"] = nlohmann::json::array();
  for (const CVec& p : g.field.points) {
    nlohmann::json coords = nlohmann::json::array();
    for (const Complex& c : p) coords.push_back({c.real(), c.imag()});
    pts.push_back(coords);
  }
  j["weights"] = g.field.weights;
  return j;
}

GoodFamily family_from_json(const nlohmann::json& j) {
  try {
    GoodFamily g{Domain::from_json(j.at("domain")), {}, j.at("delta0").get<double>()};
    for (const auto& coords : j.at("points")) {
      CVec p;
      for (const auto& c : coords) p.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
      g.field.points.push_back(std::move(p));
    }
    g.field.weights = j.at("weights").get<std::vector<Weight>>();
    if (g.field.weights.size() != g.field.points.size()) {
      throw InputError("family weight count does not match point count");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad family JSON: ") + e.what());
  }
}

}  // namespace pclab
