#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pclab/linalg.hpp"
#include "pclab/multi_index.hpp"

namespace pclab {

// Collection of mixed Wirtinger derivatives of a real function at one point,
// stored sparsely by multi-index pair (alpha, beta). Fill with add(), then
// seal() once; afterwards the jet is immutable and supports grouped queries.
class Jet {
 public:
  struct Entry {
    MultiIndex alpha;
    MultiIndex beta;
    Complex value;
  };

  Jet(CVec base, int n, int order);

  void add(const MultiIndex& alpha, const MultiIndex& beta, Complex v);
  void seal();
  bool sealed() const { return sealed_; }

  const CVec& base() const { return base_; }
  int dimension() const { return n_; }
  int order() const { return order_; }
  double max_abs() const { return max_abs_; }

  // Value of d^alpha dbar^beta rho at the base point (0 if never added).
  Complex coeff(const MultiIndex& alpha, const MultiIndex& beta) const;

  // All stored entries of total bidegree (a, b). Requires seal().
  const std::vector<Entry>& entries(int a, int b) const;

  // (a, b) Wirtinger derivative of t -> rho(base + t L) at t = 0.
  Complex line_coeff(const CVec& L, int a, int b) const;

 private:
  std::uint64_t key(const MultiIndex& alpha, const MultiIndex& beta) const;

  CVec base_;
  int n_;
  int order_;
  bool sealed_ = false;
  double max_abs_ = 0.0;
  std::vector<Entry> store_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::vector<std::vector<Entry>> groups_;
  static const std::vector<Entry> kEmpty;
};

}  // namespace pclab
