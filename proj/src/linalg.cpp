#include "pclab/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace pclab {

Complex hdot(const CVec& a, const CVec& b) {
  Complex s(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

double norm2(const CVec& a) {
  double s = 0.0;
  for (const Complex& v : a) s += std::norm(v);
  return s;
}

double vnorm(const CVec& a) { return std::sqrt(norm2(a)); }

CVec operator+(const CVec& a, const CVec& b) {
  CVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

CVec operator-(const CVec& a, const CVec& b) {
  CVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

CVec operator*(Complex s, const CVec& a) {
  CVec r(a);
  for (Complex& v : r) v *= s;
  return r;
}

CVec conjugate(const CVec& a) {
  CVec r(a);
  for (Complex& v : r) v = std::conj(v);
  return r;
}

Complex det(CMat m) {
  Complex d(1.0);
  for (int col = 0; col < m.n; ++col) {
    int pivot = col;
    double best = std::abs(m.at(col, col));
    for (int r = col + 1; r < m.n; ++r) {
      double mag = std::abs(m.at(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) return Complex(0.0);
    if (pivot != col) {
      for (int c = 0; c < m.n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      d = -d;
    }
    d *= m.at(col, col);
    for (int r = col + 1; r < m.n; ++r) {
      Complex f = m.at(r, col) / m.at(col, col);
      for (int c = col; c < m.n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return d;
}

std::vector<double> hermitian_eigenvalues(const CMat& m) {
  if (m.n == 0) return {};
  if (m.n == 1) return {m.at(0, 0).real()};
  if (m.n == 2) {
    double a = m.at(0, 0).real();
    double c = m.at(1, 1).real();
    double b2 = std::norm(m.at(0, 1));
    double tr = a + c;
    double disc = std::sqrt(std::max(0.0, (a - c) * (a - c) + 4.0 * b2));
    return {(tr - disc) / 2.0, (tr + disc) / 2.0};
  }
  // Cyclic Jacobi on the Hermitian matrix; plenty for n <= 8.
  CMat A = m;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < A.n; ++p)
      for (int q = p + 1; q < A.n; ++q) off += std::norm(A.at(p, q));
    if (off < 1e-26) break;
    for (int p = 0; p < A.n; ++p) {
      for (int q = p + 1; q < A.n; ++q) {
        Complex apq = A.at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double app = A.at(p, p).real();
        double aqq = A.at(q, q).real();
        // Unitary 2x2 rotation annihilating A(p,q).
        Complex phase = apq / std::abs(apq);
        double theta = 0.5 * std::atan2(2.0 * std::abs(apq), app - aqq);
        double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < A.n; ++k) {
          Complex akp = A.at(k, p), akq = A.at(k, q);
          A.at(k, p) = c * akp + s * std::conj(phase) * akq;
          A.at(k, q) = -s * phase * akp + c * akq;
        }
        for (int k = 0; k < A.n; ++k) {
          Complex apk = A.at(p, k), aqk = A.at(q, k);
          A.at(p, k) = c * apk + s * phase * aqk;
          A.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(A.n);
  for (int i = 0; i < A.n; ++i) ev[i] = A.at(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InputError("fit_line: need at least two matching samples");
  double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) throw InputError("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double e = y[i] - (f.slope * x[i] + f.intercept);
    ss += e * e;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

double bisect_largest(const std::function<bool(double)>& ok, double lo, double hi, double tol) {
  if (!ok(lo)) throw InputError("bisect_largest: predicate fails at lower bound");
  if (ok(hi)) return hi;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace pclab
