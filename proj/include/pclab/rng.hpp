#pragma once

#include <cstdint>

#include "pclab/linalg.hpp"

namespace pclab {

// Deterministic 64-bit stream; used only to derive offsets and phases so that
// every randomized step is reproducible from the seed.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

// Radical-inverse (van der Corput) value of index in the given prime base.
double halton(std::uint64_t index, int base);

// First few primes for Halton bases.
int nth_prime(int i);

// Quasi-random point in [0,1)^dim; the seed leaps the sequence start.
std::vector<double> halton_point(std::uint64_t index, int dim, std::uint64_t seed);

// Unit vector in C^n, quasi-uniform on the sphere (Box-Muller over Halton).
CVec quasi_complex_direction(std::uint64_t index, int n, std::uint64_t seed);

// Quasi-uniform point of the disc |w| < radius (area measure).
Complex quasi_disc_point(std::uint64_t index, double radius, std::uint64_t seed);

}  // namespace pclab
