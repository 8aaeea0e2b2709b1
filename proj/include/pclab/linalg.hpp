#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "pclab/errors.hpp"

namespace pclab {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Hermitian inner product, conjugate-linear in the second slot: sum a_j conj(b_j).
Complex hdot(const CVec& a, const CVec& b);

// Euclidean inner product of the underlying real vectors in R^(2n).
inline double real_dot(const CVec& a, const CVec& b) { return hdot(a, b).real(); }
double norm2(const CVec& a);
double vnorm(const CVec& a);
CVec operator+(const CVec& a, const CVec& b);
CVec operator-(const CVec& a, const CVec& b);
CVec operator*(Complex s, const CVec& a);
CVec conjugate(const CVec& a);

// Dense square complex matrix, row major.
struct CMat {
  int n = 0;
  std::vector<Complex> data;

  CMat() = default;
  explicit CMat(int size) : n(size), data(std::size_t(size) * size, Complex(0.0)) {}
  Complex& at(int i, int j) { return data[std::size_t(i) * n + j]; }
  Complex at(int i, int j) const { return data[std::size_t(i) * n + j]; }
};

// Determinant by Gaussian elimination with partial pivoting.
Complex det(CMat m);

// Eigenvalues of a Hermitian matrix, ascending. Sizes used here are tiny
// (n - 1 <= 3): closed forms for 1x2, cyclic Jacobi above that.
std::vector<double> hermitian_eigenvalues(const CMat& m);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms of fit residuals
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Largest t in [lo, hi] with ok(t), assuming ok is monotone (true then false).
// Requires ok(lo); returns hi if ok(hi).
double bisect_largest(const std::function<bool(double)>& ok, double lo, double hi, double tol);

}  // namespace pclab
