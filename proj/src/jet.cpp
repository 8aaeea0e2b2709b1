#include "pclab/jet.hpp"

#include <cmath>

#include "pclab/errors.hpp"

namespace pclab {

const std::vector<Jet::Entry> Jet::kEmpty;

Jet::Jet(CVec base, int n, int order) : base_(std::move(base)), n_(n), order_(order) {
  if (order_ < 0 || order_ > 32) throw InputError("Jet: order out of range");
}

std::uint64_t Jet::key(const MultiIndex& alpha, const MultiIndex& beta) const {
  // Exponents are <= order <= 32; base-33 digits fit 2n <= 8 coordinates in 64 bits.
  std::uint64_t k = 0;
  for (int v : alpha) k = k * 33 + std::uint64_t(v);
  for (int v : beta) k = k * 33 + std::uint64_t(v);
  return k;
}

void Jet::add(const MultiIndex& alpha, const MultiIndex& beta, Complex v) {
  if (sealed_) throw InputError("Jet::add: jet is sealed");
  int a = mi_total(alpha), b = mi_total(beta);
  if (a + b > order_) return;
  auto [it, inserted] = lookup_.try_emplace(key(alpha, beta), store_.size());
  if (inserted)
    store_.push_back({alpha, beta, v});
  else
    store_[it->second].value += v;
}

void Jet::seal() {
  if (sealed_) return;
  sealed_ = true;
  groups_.assign(std::size_t(order_ + 1) * (order_ + 1), {});
  max_abs_ = 0.0;
  for (const Entry& e : store_) {
    int a = mi_total(e.alpha), b = mi_total(e.beta);
    groups_[std::size_t(a) * (order_ + 1) + b].push_back(e);
    double mag = std::abs(e.value);
    if (mag > max_abs_) max_abs_ = mag;
  }
}

Complex Jet::coeff(const MultiIndex& alpha, const MultiIndex& beta) const {
  auto it = lookup_.find(key(alpha, beta));
  return it == lookup_.end() ? Complex(0.0) : store_[it->second].value;
}

const std::vector<Jet::Entry>& Jet::entries(int a, int b) const {
  if (!sealed_) throw InputError("Jet::entries: seal() the jet first");
  if (a < 0 || b < 0 || a + b > order_) return kEmpty;
  return groups_[std::size_t(a) * (order_ + 1) + b];
}

Complex Jet::line_coeff(const CVec& L, int a, int b) const {
  if (a + b > order_) throw InputError("Jet::line_coeff: bidegree exceeds jet order");
  // Chain rule for z = base + t L: the (a, b) derivative in (t, tbar) expands
  // multinomially over ambient bidegree-(a, b) entries.
  Complex sum(0.0);
  for (const Entry& e : entries(a, b)) {
    Complex prod(1.0);
    for (int j = 0; j < n_; ++j) {
      for (int p = 0; p < e.alpha[j]; ++p) prod *= L[j];
      for (int p = 0; p < e.beta[j]; ++p) prod *= std::conj(L[j]);
    }
    sum += multinomial(a, e.alpha) * multinomial(b, e.beta) * prod * e.value;
  }
  return sum;
}

}  // namespace pclab
