#include "pclab/domain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "pclab/errors.hpp"

namespace pclab {
namespace {

Complex cpow(Complex z, int m) {
  Complex r(1.0);
  for (int i = 0; i < m; ++i) r *= z;
  return r;
}

// d^a dbar^b of coeff * z^alpha * zbar^beta at z, term-wise falling factorials.
Complex monomial_derivative(const MonomialTerm& t, const CVec& z, const MultiIndex& a,
                            const MultiIndex& b) {
  Complex value(t.coeff);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (a[j] > t.alpha[j] || b[j] > t.beta[j]) return Complex(0.0);
    value *= falling_factorial(t.alpha[j], a[j]) * falling_factorial(t.beta[j], b[j]);
    value *= cpow(z[j], t.alpha[j] - a[j]) * cpow(std::conj(z[j]), t.beta[j] - b[j]);
  }
  return value;
}

// Coefficient lists (ascending degree) of Q_k with F^(k)(u) = exp(1 - 1/u) Q_k(1/u),
// generated by Q_0 = 1 and Q_{k+1}(t) = t^2 (Q_k(t) - Q_k'(t)).
const std::vector<std::vector<double>>& q_polynomials() {
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> qs;
    qs.push_back({1.0});
    for (int k = 0; k < Domain::kMaxDerivOrder; ++k) {
      const std::vector<double>& q = qs.back();
      std::vector<double> next(q.size() + 2, 0.0);
      for (std::size_t j = 0; j < q.size(); ++j) {
        next[j + 2] += q[j];
        if (j > 0) next[j + 1] -= double(j) * q[j];
      }
      qs.push_back(std::move(next));
    }
    return qs;
  }();
  return table;
}

}  // namespace

double exp_flat_radial_derivative(int k, double u) {
  if (k < 0 || k > Domain::kMaxDerivOrder)
    throw InputError("exp_flat_radial_derivative: order out of range");
  if (u < 0.0) throw InputError("exp_flat_radial_derivative: negative radial argument");
  if (u == 0.0) return 0.0;
  const std::vector<double>& q = q_polynomials()[std::size_t(k)];
  double t = 1.0 / u;
  if (t <= 1e3) {
    double qv = 0.0;
    for (std::size_t j = q.size(); j-- > 0;) qv = qv * t + q[j];
    return std::exp(1.0 - t) * qv;
  }
  // Large t: Horner on the reversed coefficients gives Q_k(t) / t^deg without
  // overflow, and the magnitude moves into the exponent.
  double r = 0.0;
  for (double c : q) r = r * u + c;
  double logmag = (1.0 - t) + double(q.size() - 1) * std::log(t);
  return std::exp(logmag) * r;
}

Domain::Domain(DomainKind kind, int n) : kind_(kind), n_(n) {}

Domain Domain::unit_ball(int n) {
  if (n < 1) throw InputError("unit_ball: dimension must be at least 1");
  Domain d(DomainKind::UnitBall, n);
  d.build_monomials();
  return d;
}

Domain Domain::egg(std::vector<int> exponents) {
  if (exponents.empty()) throw InputError("egg: need at least one exponent");
  for (int m : exponents)
    if (m < 1) throw InputError("egg: exponents must be positive integers");
  Domain d(DomainKind::Egg, int(exponents.size()));
  d.exponents_ = std::move(exponents);
  d.build_monomials();
  return d;
}

Domain Domain::exp_flat() {
  Domain d(DomainKind::ExpFlat, 2);
  d.build_monomials();
  return d;
}

Domain Domain::polynomial(int n, std::vector<MonomialTerm> terms) {
  if (n < 1) throw InputError("polynomial: dimension must be at least 1");
  Domain d(DomainKind::GeneralPolynomial, n);
  d.terms_ = std::move(terms);
  d.validate_polynomial();
  return d;
}

void Domain::build_monomials() {
  MultiIndex zero(n_, 0);
  terms_.push_back({zero, zero, -1.0});
  switch (kind_) {
    case DomainKind::UnitBall:
      for (int j = 0; j < n_; ++j) {
        MultiIndex e(n_, 0);
        e[j] = 1;
        terms_.push_back({e, e, 1.0});
      }
      break;
    case DomainKind::Egg:
      for (int j = 0; j < n_; ++j) {
        MultiIndex e(n_, 0);
        e[j] = exponents_[std::size_t(j)];
        terms_.push_back({e, e, 1.0});
      }
      break;
    case DomainKind::ExpFlat: {
      MultiIndex e1{1, 0};
      terms_.push_back({e1, e1, 1.0});
      break;
    }
    case DomainKind::GeneralPolynomial:
      break;
  }
}

void Domain::validate_polynomial() const {
  std::map<std::pair<MultiIndex, MultiIndex>, double> merged;
  for (const MonomialTerm& t : terms_) {
    if (int(t.alpha.size()) != n_ || int(t.beta.size()) != n_)
      throw InputError("polynomial: term multi-index length does not match dimension");
    for (int v : t.alpha)
      if (v < 0) throw InputError("polynomial: negative exponent");
    for (int v : t.beta)
      if (v < 0) throw InputError("polynomial: negative exponent");
    merged[{t.alpha, t.beta}] += t.coeff;
  }
  for (const auto& [key, value] : merged) {
    auto mirror = merged.find({key.second, key.first});
    double opposite = mirror == merged.end() ? 0.0 : mirror->second;
    if (value != opposite)
      throw InputError("polynomial: terms are not conjugate symmetric, rho would not be real");
  }
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::UnitBall:
      return "unit_ball_" + std::to_string(n_);
    case DomainKind::Egg: {
      std::string s = "egg";
      for (int m : exponents_) s += "_" + std::to_string(m);
      return s;
    }
    case DomainKind::ExpFlat:
      return "exp_flat";
    case DomainKind::GeneralPolynomial:
      return "polynomial_" + std::to_string(n_);
  }
  return "unknown";
}

double Domain::rho(const CVec& z) const {
  if (int(z.size()) != n_) throw InputError("rho: point dimension mismatch");
  Complex sum(0.0);
  for (const MonomialTerm& t : terms_) {
    Complex v(t.coeff);
    for (int j = 0; j < n_; ++j)
      v *= cpow(z[std::size_t(j)], t.alpha[std::size_t(j)]) *
           cpow(std::conj(z[std::size_t(j)]), t.beta[std::size_t(j)]);
    sum += v;
  }
  double value = sum.real();
  if (kind_ == DomainKind::ExpFlat) value += exp_flat_radial_derivative(0, std::norm(z[1]));
  return value;
}

Complex Domain::derivative(const CVec& z, const MultiIndex& alpha, const MultiIndex& beta) const {
  if (int(z.size()) != n_ || int(alpha.size()) != n_ || int(beta.size()) != n_)
    throw InputError("derivative: dimension mismatch");
  int a = mi_total(alpha), b = mi_total(beta);
  if (a + b > kMaxDerivOrder) throw InputError("derivative: total order too large");
  Complex sum(0.0);
  for (const MonomialTerm& t : terms_) sum += monomial_derivative(t, z, alpha, beta);
  if (kind_ == DomainKind::ExpFlat && alpha[0] == 0 && beta[0] == 0) {
    // Mixed derivative of F(z_2 zbar_2): product rule across the two slots.
    int p = alpha[1], q = beta[1];
    Complex w = z[1], v = std::conj(z[1]);
    double u = std::norm(z[1]);
    for (int i = 0; i <= std::min(p, q); ++i) {
      double radial = exp_flat_radial_derivative(p + q - i, u);
      if (radial == 0.0) continue;
      sum += binomial(p, i) * falling_factorial(q, i) * cpow(w, q - i) * cpow(v, p - i) * radial;
    }
  }
  return sum;
}

CVec Domain::gradient_zbar(const CVec& z) const {
  CVec g(std::size_t(n_), Complex(0.0));
  MultiIndex zero(n_, 0), e(n_, 0);
  for (int j = 0; j < n_; ++j) {
    e[j] = 1;
    g[std::size_t(j)] = derivative(z, zero, e);
    e[j] = 0;
  }
  return g;
}

CMat Domain::complex_hessian(const CVec& z) const {
  CMat h(n_);
  MultiIndex ep(n_, 0), eq(n_, 0);
  for (int p = 0; p < n_; ++p) {
    ep[p] = 1;
    for (int q = 0; q < n_; ++q) {
      eq[q] = 1;
      h.at(p, q) = derivative(z, ep, eq);
      eq[q] = 0;
    }
    ep[p] = 0;
  }
  return h;
}

Jet Domain::jet(const CVec& z, int order) const {
  if (int(z.size()) != n_) throw InputError("jet: point dimension mismatch");
  if (order < 0 || order > kMaxJetOrder) throw InputError("jet: order out of range");
  Jet out(z, n_, order);
  MultiIndex a(n_, 0), b(n_, 0);
  for (const MonomialTerm& t : terms_) {
    // Walk every sub-derivative pair (a <= alpha, b <= beta) with an odometer.
    std::fill(a.begin(), a.end(), 0);
    std::fill(b.begin(), b.end(), 0);
    for (;;) {
      if (mi_total(a) + mi_total(b) <= order) {
        Complex v = monomial_derivative(t, z, a, b);
        if (v != Complex(0.0)) out.add(a, b, v);
      }
      int j = 0;
      for (; j < 2 * n_; ++j) {
        int& digit = j < n_ ? a[j] : b[j - n_];
        int cap = j < n_ ? t.alpha[j] : t.beta[j - n_];
        if (digit < cap) {
          ++digit;
          break;
        }
        digit = 0;
      }
      if (j == 2 * n_) break;
    }
  }
  if (kind_ == DomainKind::ExpFlat) {
    Complex w = z[1], v = std::conj(z[1]);
    double u = std::norm(z[1]);
    for (int p = 0; p <= order; ++p)
      for (int q = 0; p + q <= order; ++q) {
        Complex sum(0.0);
        for (int i = 0; i <= std::min(p, q); ++i) {
          double radial = exp_flat_radial_derivative(p + q - i, u);
          if (radial == 0.0) continue;
          sum += binomial(p, i) * falling_factorial(q, i) * cpow(w, q - i) * cpow(v, p - i) *
                 radial;
        }
        if (sum != Complex(0.0)) out.add({0, p}, {0, q}, sum);
      }
  }
  out.seal();
  return out;
}

Domain Domain::from_json(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw InputError("domain json: expected an object with a kind field");
  std::string kind = spec.at("kind").get<std::string>();
  try {
    if (kind == "unit_ball") return unit_ball(spec.at("n").get<int>());
    if (kind == "egg") return egg(spec.at("params").at("exponents").get<std::vector<int>>());
    if (kind == "exp_flat") return exp_flat();
    if (kind == "polynomial") {
      std::vector<MonomialTerm> terms;
      for (const auto& jt : spec.at("params").at("terms")) {
        MonomialTerm t;
        t.alpha = jt.at("alpha").get<MultiIndex>();
        t.beta = jt.at("beta").get<MultiIndex>();
        t.coeff = jt.at("coeff").get<double>();
        terms.push_back(std::move(t));
      }
      return polynomial(spec.at("n").get<int>(), std::move(terms));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("domain json: ") + e.what());
  }
  throw InputError("domain json: unknown kind '" + kind + "'");
}

nlohmann::json Domain::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  switch (kind_) {
    case DomainKind::UnitBall:
      j["kind"] = "unit_ball";
      break;
    case DomainKind::Egg:
      j["kind"] = "egg";
      j["params"] = {{"exponents", exponents_}};
      break;
    case DomainKind::ExpFlat:
      j["kind"] = "exp_flat";
      break;
    case DomainKind::GeneralPolynomial: {
      j["kind"] = "polynomial";
      nlohmann::json terms = nlohmann::json::array();
      for (const MonomialTerm& t : terms_) {
        terms.push_back({{"alpha", t.alpha}, {"beta", t.beta}, {"coeff", t.coeff}});
      }
      j["params"] = {{"terms", std::move(terms)}};
      break;
    }
  }
  return j;
}

}  // namespace pclab
