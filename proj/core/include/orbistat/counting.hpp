#pragma once

#include <cstdint>
#include <vector>

#include "orbistat/fibration.hpp"
#include "orbistat/frobenian.hpp"
#include "orbistat/prime_table.hpp"
#include "orbistat/rational.hpp"
#include "orbistat/solubility.hpp"

namespace orbistat::count {

// c_S(alpha) = prod_{p in S} (1 - p^{-alpha}).
Rat c_s_exact(const std::vector<std::int64_t>& S, int alpha);
double c_s_real(const std::vector<std::int64_t>& S, double alpha);

// A two-sided multiplicative counting problem: ordered pairs (a0, a1) of
// nonzero integers with |ai| <= B, gcd(a0, a1) = 1, and for every prime
// p outside S dividing ai: p in Pi and mi | v_p(ai).
struct PairCountSpec {
  int m0 = 1, m1 = 1;
  frob::FrobenianSet P0 = frob::FrobenianSet::all_primes();
  frob::FrobenianSet P1 = frob::FrobenianSet::all_primes();
  std::vector<std::int64_t> S;
  Rat density0 = 1, density1 = 1;  // densities of P0, P1, used by main terms

  void validate() const;
};

struct PairCount {
  std::int64_t pairs = 0;  // both coordinates nonzero
  std::int64_t axis = 4;   // the four primitive axis pairs, reported apart
  double seconds = 0.0;
};

PairCount count_frobenian_pairs(const PairCountSpec& spec, std::int64_t B,
                                const poly::PrimeTable& table);

// #{1 <= n <= x : every prime factor of n lies in P setminus S}.
std::int64_t count_mult_support(const frob::FrobenianSet& P,
                                const std::vector<std::int64_t>& S,
                                std::int64_t x, const poly::PrimeTable& table);

// Truncated kappa_S = prod_{p in S} (1-1/p)^dens *
//                     prod_{p <= cutoff, p notin S} (1-1/p)^(dens - [p in P]).
// Excluded primes of P outside S count as non-members and are appended to
// warned when given.
double kappa_truncated(const frob::FrobenianSet& P,
                       const std::vector<std::int64_t>& S, double dens,
                       std::int64_t cutoff, const poly::PrimeTable& table,
                       std::vector<std::int64_t>* warned);

// kappa * x * (log x)^(dens-1) / Gamma(dens): the expected size of
// count_mult_support.
double mult_support_main(const frob::FrobenianSet& P,
                         const std::vector<std::int64_t>& S, double dens,
                         std::int64_t x, std::int64_t cutoff,
                         const poly::PrimeTable& table);

struct ConstantResult {
  double value = 0.0;       // Euler product truncated at cutoff
  double value_half = 0.0;  // same, truncated at cutoff / 2
  std::int64_t cutoff = 0;
  std::vector<std::int64_t> warned;  // excluded primes outside S, as non-members
};

// The predicted leading constant for count_frobenian_pairs:
//   4 m0^(1-d0) m1^(1-d1) / (Gamma(d0) Gamma(d1))
//   * c_S(1/m0 + 1/m1) / (c_S(1/m0) c_S(1/m1))
//   * prod_{p in S} (1 - 1/p)^(d0 + d1)
//   * prod_{p <= cutoff, p notin S} (1-1/p)^(d0-e0) (1-1/p)^(d1-e1) (1-1/p^2)^(e0 e1)
// with ei = [p in Pi].  The per-prime grouping keeps the truncation stable.
ConstantResult asymptotic_constant(const PairCountSpec& spec, std::int64_t cutoff,
                                   const poly::PrimeTable& table);

// constant * B^(1/m0 + 1/m1) / (log B)^(2 - d0 - d1).
double pair_count_main(const PairCountSpec& spec, double constant, double B);

// Points of P^1(Q) of height <= B passing the chosen local test at every
// prime outside bad_primes that meets a listed fibre.  Points lying on a
// listed fibre are excluded and tallied separately.
struct NlocResult {
  std::int64_t points = 0;
  std::int64_t on_divisor = 0;
  double seconds = 0.0;
};

NlocResult count_nloc_example(const orb::FibrationDescriptor& desc,
                              std::int64_t B, sol::Mode mode,
                              const poly::PrimeTable& table);

// #{(u, v) : u, v >= 0, gcd(u, v) = 1, 0 < u^6 + v^2 <= X^2, every prime
// dividing u^6 + v^2 splits completely in the field of K}.  Ramified primes
// of K reject a pair.  Requires table.bound() >= X^2.
std::int64_t count_beta_sieve_pairs(const poly::IntPoly& K, std::int64_t X,
                                    const poly::PrimeTable& table);

}  // namespace orbistat::count
