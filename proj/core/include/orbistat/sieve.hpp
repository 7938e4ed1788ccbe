#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbistat/fibration.hpp"
#include "orbistat/frobenian.hpp"
#include "orbistat/prime_table.hpp"

namespace orbistat::sieve {

// nu(p) = #{(t0, t1) in F_p^2 : h(v0 t0^e0, v1 t1^e1) = 0}.
std::int64_t nu_point_count(std::int64_t p, const poly::BinaryForm& h, int e0,
                            int e1, const Int& v0, const Int& v1);

// The sieve densities describe, prime by prime, the residue pairs
// (t0, t1) mod p^2 that the local test at p rules out for the family
// x = (v0 t0^m0 : v1 t1^m1), with m0, m1 the coordinate fibre
// multiplicities.  A coordinate event fires when the fibre exists, is not
// split, and frobenius does not fix a minimal component; a middle event
// fires likewise and needs the fibre to have multiplicity 1.
//
// omega_bar_main(p): first-order density
//   [zero event] / p + [infinity event] / p + sum_j [event j] nu_j(p) / p^2
// clamped to [0, 1 - 1e-9].
double omega_bar_main(const orb::FibrationDescriptor& desc, std::int64_t p,
                      const Int& v0, const Int& v1);

// Exact density at a small prime (p <= 37): the proportion of pairs
// (t0, t1) in (Z/p^2)^2 with p dividing t0 to order exactly one (zero
// event), p dividing t1 to order exactly one (infinity event), or p dividing
// g_j(v0 t0^m0, v1 t1^m1) to order exactly one (middle events).
double omega_bar_exact(const orb::FibrationDescriptor& desc, std::int64_t p,
                       const Int& v0, const Int& v1);

// L(Q) = sum over squarefree q <= Q supported on the given primes of
// prod_{p | q} w_p / (1 - w_p); the q = 1 term contributes 1.
double large_sieve_l(std::int64_t Q,
                     const std::vector<std::pair<std::int64_t, double>>& omega);

// (B0 + Q^(2 m)) * (B1 + Q^(2 m)) / L.
double large_sieve_bound(double B0, double B1, int m, std::int64_t Q, double L);

struct LogSum {
  double sum = 0.0;         // sum of 1/p over p <= x outside T
  double main = 0.0;        // complement_density * log log x
  double difference = 0.0;  // sum - main
};

// Excluded primes of T are skipped entirely.
LogSum chebotarev_logsum(const frob::FrobenianSet& T, std::int64_t x,
                         double complement_density, const poly::PrimeTable& table);

}  // namespace orbistat::sieve
