#pragma once

#include <cstdint>
#include <vector>

#include "pclab/boundary.hpp"
#include "pclab/domain.hpp"

namespace pclab {

// Sentinel for an infinite contact order / weight entry.
constexpr int kInfiniteOrder = -1;

// Weight (m_1, ..., m_n); entries are positive integers or kInfiniteOrder.
using Weight = std::vector<int>;

// Lattice validity: nondecreasing entries, and for every finite prefix
// length k there are nonnegative integers a_1..a_k with a_k >= 1 and
// sum a_j / m_j = 1 (checked in exact integer arithmetic).
bool weight_valid(const Weight& w);

// True when every finite entry past the first is even; smooth model
// boundaries only produce even tangential contact orders.
bool weight_parity_ok(const Weight& w);

// Round odd finite tangential entries up to the next even integer.
Weight repair_weight_parity(Weight w);

// Smallest total derivative order of t -> rho(p + t L) that does not vanish,
// read from the jet restricted to the line; kInfiniteOrder if every order up
// to kmax vanishes. L must be a unit complex tangent direction at p.
int contact_order(const Domain& d, const CVec& p, const CVec& L, int kmax);

struct MultitypeOptions {
  int kmax = 12;
  int direction_samples = 256;
  std::uint64_t seed = 1;
  bool repair_parity = false;
};

struct MultitypeResult {
  Weight weight;             // (1, m_2, ..., m_n) ascending
  std::vector<CVec> frame;   // normal first, then directions realizing m_2..m_n
  bool infinite = false;     // some tangent direction exceeded kmax
  bool converged = false;    // weight stable when kmax grows by 2
  bool parity_ok = true;
  bool parity_repaired = false;
  bool gamma_valid = false;  // weight_valid of the returned weight
  int kmax = 0;
};

// Greedy linear multitype: repeatedly pick the sampled tangent direction of
// maximal contact order, then restrict to its Hermitian orthocomplement.
// Coordinate-axis projections are always among the candidates, which makes
// the search exact on diagonal model domains.
MultitypeResult linear_multitype(const Domain& d, const CVec& p, const MultitypeOptions& opt = {});

// mu = sum_{j>=2} 1/m_j; infinite entries contribute zero.
double mu_sum(const Weight& w);

// mu_j = sum_{k != j} 1/m_k, with 1-based j.
double mu_complement(const Weight& w, int j);

// Bounds mu_j <= n/2 for j >= 2 and mu_1 <= (n-1)/2.
bool mu_bounds_ok(const Weight& w);

}  // namespace pclab
