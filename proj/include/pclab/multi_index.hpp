#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace pclab {

// Exponent vector for one coordinate group; dimensions stay small (n <= 8).
using MultiIndex = std::vector<int>;

inline int mi_total(const MultiIndex& a) {
  int t = 0;
  for (int v : a) t += v;
  return t;
}

inline bool mi_leq(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// m (m-1) ... (m-k+1); exact in double for the orders used here (k <= 16).
inline double falling_factorial(int m, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= double(m - i);
  return r;
}

inline double factorial(int k) { return falling_factorial(k, k); }

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// k! / prod(a_j!) for |a| = k.
inline double multinomial(int k, const MultiIndex& a) {
  double r = factorial(k);
  for (int v : a) r /= factorial(v);
  return r;
}

// Visit every multi-index of dimension n with total exactly k.
inline void for_each_composition(int n, int k, const std::function<void(const MultiIndex&)>& fn) {
  MultiIndex a(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      a[pos] = left;
      fn(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (n == 0) return;
  rec(0, k);
}

}  // namespace pclab
