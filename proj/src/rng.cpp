#include "pclab/rng.hpp"

#include <cmath>
#include <numbers>

#include "pclab/errors.hpp"

namespace pclab {

double halton(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * double(index % std::uint64_t(base));
    index /= std::uint64_t(base);
  }
  return r;
}

int nth_prime(int i) {
  static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                               31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  if (i < 0 || i >= int(sizeof(primes) / sizeof(primes[0])))
    throw InputError("nth_prime: index out of the supported range");
  return primes[i];
}

std::vector<double> halton_point(std::uint64_t index, int dim, std::uint64_t seed) {
  // Leap the sequence start by a seed-derived offset; indices stay collision
  // free so reruns with the same seed reproduce the exact stream.
  SplitMix64 mix(seed ^ 0x5851f42d4c957f2dULL);
  std::uint64_t leap = 1000 + (mix.next() % 100000);
  std::vector<double> p(dim);
  for (int d = 0; d < dim; ++d) p[d] = halton(index + leap, nth_prime(d));
  return p;
}

CVec quasi_complex_direction(std::uint64_t index, int n, std::uint64_t seed) {
  std::vector<double> u = halton_point(index, 2 * n, seed);
  CVec v(n);
  for (int j = 0; j < n; ++j) {
    double u1 = std::max(u[2 * j], 1e-12);
    double u2 = u[2 * j + 1];
    double mag = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * std::numbers::pi * u2;
    v[j] = Complex(mag * std::cos(ang), mag * std::sin(ang));
  }
  double len = vnorm(v);
  if (len < 1e-12) return quasi_complex_direction(index + 7919, n, seed);
  return Complex(1.0 / len) * v;
}

Complex quasi_disc_point(std::uint64_t index, double radius, std::uint64_t seed) {
  std::vector<double> u = halton_point(index, 2, seed);
  double r = radius * std::sqrt(u[0]);
  double ang = 2.0 * std::numbers::pi * u[1];
  return Complex(r * std::cos(ang), r * std::sin(ang));
}

}  // namespace pclab
