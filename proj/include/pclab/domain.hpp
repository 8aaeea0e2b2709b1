#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pclab/jet.hpp"
#include "pclab/linalg.hpp"
#include "pclab/multi_index.hpp"

namespace pclab {

enum class DomainKind { UnitBall, Egg, ExpFlat, GeneralPolynomial };

// One monomial coeff * z^alpha * zbar^beta of a real defining function.
struct MonomialTerm {
  MultiIndex alpha;
  MultiIndex beta;
  double coeff = 0.0;
};

// A bounded domain {rho < 0} given by one of four defining-function shapes:
//   UnitBall           rho = sum |z_j|^2 - 1
//   Egg                rho = sum |z_j|^(2 m_j) - 1
//   ExpFlat            rho = |z_1|^2 + exp(1 - 1/|z_2|^2) - 1   (n = 2)
//   GeneralPolynomial  rho = sum of conjugate-symmetric monomials
// All mixed Wirtinger derivatives are evaluated in closed form.
class Domain {
 public:
  static constexpr int kMaxJetOrder = 16;
  static constexpr int kMaxDerivOrder = 32;

  static Domain unit_ball(int n);
  static Domain egg(std::vector<int> exponents);
  static Domain exp_flat();
  static Domain polynomial(int n, std::vector<MonomialTerm> terms);

  static Domain from_json(const nlohmann::json& spec);
  nlohmann::json to_json() const;

  DomainKind kind() const { return kind_; }
  int dimension() const { return n_; }
  std::string name() const;

  // Egg exponents (m_1, ..., m_n); empty for other kinds.
  const std::vector<int>& exponents() const { return exponents_; }

  double rho(const CVec& z) const;

  // d^alpha dbar^beta rho at z, total order at most kMaxDerivOrder.
  Complex derivative(const CVec& z, const MultiIndex& alpha, const MultiIndex& beta) const;

  // g with g_j = d rho / d zbar_j.
  CVec gradient_zbar(const CVec& z) const;

  // H with H_{pq} = d^2 rho / (d z_p d zbar_q).
  CMat complex_hessian(const CVec& z) const;

  // All mixed derivatives of total order <= order (order <= kMaxJetOrder).
  Jet jet(const CVec& z, int order) const;

 private:
  Domain(DomainKind kind, int n);

  void build_monomials();
  void validate_polynomial() const;

  DomainKind kind_;
  int n_;
  std::vector<int> exponents_;
  std::vector<MonomialTerm> terms_;
};

// k-th derivative of F(u) = exp(1 - 1/u), flat continuation F(0) = 0.
double exp_flat_radial_derivative(int k, double u);

}  // namespace pclab
