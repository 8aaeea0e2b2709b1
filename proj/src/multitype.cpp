#include "pclab/multitype.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <utility>

#include "pclab/errors.hpp"
#include "pclab/jet.hpp"
#include "pclab/rng.hpp"

namespace pclab {

namespace {

constexpr double kTangentTol = 1e-8;

bool is_finite_entry(int m) { return m != kInfiniteOrder; }

// Nonnegative integers a_0..a_k with a_k >= 1 and sum a_j * unit[j] == total?
bool lattice_hit(const std::vector<long long>& unit, long long total) {
  const std::size_t k = unit.size() - 1;
  std::function<bool(std::size_t, long long)> go = [&](std::size_t j, long long rem) -> bool {
    if (j == k) return rem >= unit[k] && rem % unit[k] == 0;
    for (long long a = 0; a * unit[j] <= rem; ++a) {
      if (go(j + 1, rem - a * unit[j])) return true;
    }
    return false;
  };
  return go(0, total);
}

// Smallest total order with a nonvanishing line coefficient, scanning the
// sealed jet along direction L up to min(cap, jet order).
int order_scan(const Jet& jet, const CVec& L, int cap) {
  const double tol = 1e-9 * std::max(1.0, jet.max_abs());
  const int top = std::min(cap, jet.order());
  for (int m = 1; m <= top; ++m) {
    for (int a = 0; a <= m; ++a) {
      if (std::abs(jet.line_coeff(L, a, m - a)) > tol) return m;
    }
  }
  return kInfiniteOrder;
}

// Infinite dominates every finite order.
bool order_less(int a, int b) {
  if (a == b) return false;
  if (a == kInfiniteOrder) return false;
  if (b == kInfiniteOrder) return true;
  return a < b;
}

struct GreedyOutcome {
  std::vector<int> orders;    // discovery order, largest subspace first
  std::vector<CVec> dirs;
  bool infinite = false;
};

// One greedy pass at a fixed order cap over a shared jet. The candidate set
// at each stage is the current orthonormal basis itself plus quasi-random
// unit combinations of it, so coordinate axes of the reduced space are
// always tried exactly.
GreedyOutcome greedy_pass(const Jet& jet, std::vector<CVec> basis, int cap,
                          const MultitypeOptions& opt) {
  GreedyOutcome out;
  int stage = 0;
  while (!basis.empty()) {
    const std::size_t dim = basis.size();
    int best_order = 0;
    CVec best_dir;
    auto consider = [&](const CVec& cand) {
      const int ord = order_scan(jet, cand, cap);
      if (best_dir.empty() || order_less(best_order, ord)) {
        best_order = ord;
        best_dir = cand;
      }
    };
    for (const CVec& b : basis) consider(b);
    if (dim > 1) {
      for (int idx = 0; idx < opt.direction_samples; ++idx) {
        const CVec coeffs =
            quasi_complex_direction(idx, static_cast<int>(dim), opt.seed + 977 * stage);
        CVec cand(jet.dimension(), Complex(0.0));
        for (std::size_t i = 0; i < dim; ++i) cand = cand + coeffs[i] * basis[i];
        consider(cand);
      }
    }
    out.orders.push_back(best_order);
    out.dirs.push_back(best_dir);
    if (best_order == kInfiniteOrder) out.infinite = true;

    // Hermitian orthocomplement of the chosen direction inside span(basis).
    std::vector<CVec> reduced;
    for (const CVec& b : basis) {
      CVec v = b - hdot(b, best_dir) * best_dir;
      for (const CVec& r : reduced) v = v - hdot(v, r) * r;
      const double len = vnorm(v);
      if (len > 1e-8) reduced.push_back((1.0 / len) * v);
    }
    if (reduced.size() != dim - 1) {
      throw NumericError("tangent space reduction lost rank during multitype search");
    }
    basis = std::move(reduced);
    ++stage;
  }
  return out;
}

}  // namespace

bool weight_valid(const Weight& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (int m : w) {
    if (is_finite_entry(m) && m < 1) return false;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!is_finite_entry(w[i])) {
      if (is_finite_entry(w[i + 1])) return false;
    } else if (is_finite_entry(w[i + 1]) && w[i + 1] < w[i]) {
      return false;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_finite_entry(w[k])) continue;
    long long lcm = 1;
    for (std::size_t j = 0; j <= k; ++j) lcm = std::lcm(lcm, static_cast<long long>(w[j]));
    std::vector<long long> unit(k + 1);
    for (std::size_t j = 0; j <= k; ++j) unit[j] = lcm / w[j];
    if (!lattice_hit(unit, lcm)) return false;
  }
  return true;
}

bool weight_parity_ok(const Weight& w) {
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (is_finite_entry(w[j]) && w[j] % 2 != 0) return false;
  }
  return true;
}

Weight repair_weight_parity(Weight w) {
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (is_finite_entry(w[j]) && w[j] % 2 != 0) ++w[j];
  }
  return w;
}

int contact_order(const Domain& d, const CVec& p, const CVec& L, int kmax) {
  if (kmax < 1 || kmax > Domain::kMaxJetOrder) {
    throw InputError("contact order cap must lie in [1, " +
                     std::to_string(Domain::kMaxJetOrder) + "]");
  }
  if (static_cast<int>(L.size()) != d.dimension()) {
    throw InputError("direction dimension does not match the domain");
  }
  const double len = vnorm(L);
  if (len < 1e-14) throw InputError("direction vector is zero");
  const CVec unit = (1.0 / len) * L;
  const CVec nu = outward_normal(d, p);
  if (std::abs(hdot(unit, nu)) > kTangentTol) {
    throw InputError("direction is not a complex tangent at the base point");
  }
  const Jet jet = d.jet(p, kmax);
  return order_scan(jet, unit, kmax);
}

MultitypeResult linear_multitype(const Domain& d, const CVec& p, const MultitypeOptions& opt) {
  if (opt.kmax < 2 || opt.kmax > Domain::kMaxJetOrder) {
    throw InputError("multitype order cap must lie in [2, " +
                     std::to_string(Domain::kMaxJetOrder) + "]");
  }
  if (opt.direction_samples < 0) throw InputError("direction sample count is negative");

  const BoundaryFrame frame = tangent_frame(d, p);
  const int probe_cap = std::min(opt.kmax + 2, Domain::kMaxJetOrder);
  const Jet jet = d.jet(p, probe_cap);

  const GreedyOutcome run = greedy_pass(jet, frame.tangents, opt.kmax, opt);
  const GreedyOutcome probe = greedy_pass(jet, frame.tangents, probe_cap, opt);

  MultitypeResult out;
  out.kmax = opt.kmax;
  out.infinite = run.infinite;
  out.converged = run.orders == probe.orders;

  // Pair each tangential order with its direction and sort ascending; the
  // normal direction carries weight 1 by convention.
  std::vector<std::pair<int, CVec>> slots;
  for (std::size_t i = 0; i < run.orders.size(); ++i) slots.emplace_back(run.orders[i], run.dirs[i]);
  std::stable_sort(slots.begin(), slots.end(),
                   [](const auto& a, const auto& b) { return order_less(a.first, b.first); });

  out.weight.push_back(1);
  out.frame.push_back(frame.normal);
  for (const auto& [ord, dir] : slots) {
    out.weight.push_back(ord);
    out.frame.push_back(dir);
  }

  out.parity_ok = weight_parity_ok(out.weight);
  if (!out.parity_ok && opt.repair_parity) {
    out.weight = repair_weight_parity(out.weight);
    out.parity_repaired = true;
  }
  out.gamma_valid = weight_valid(out.weight);
  return out;
}

double mu_sum(const Weight& w) {
  double s = 0.0;
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (is_finite_entry(w[j])) s += 1.0 / w[j];
  }
  return s;
}

double mu_complement(const Weight& w, int j) {
  if (j < 1 || j > static_cast<int>(w.size())) throw InputError("weight index out of range");
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (static_cast<int>(k) + 1 == j) continue;
    if (is_finite_entry(w[k])) s += 1.0 / w[k];
  }
  return s;
}

bool mu_bounds_ok(const Weight& w) {
  const double n = static_cast<double>(w.size());
  if (mu_complement(w, 1) > (n - 1.0) / 2.0 + 1e-12) return false;
  for (int j = 2; j <= static_cast<int>(w.size()); ++j) {
    if (mu_complement(w, j) > n / 2.0 + 1e-12) return false;
  }
  return true;
}

}  // namespace pclab
