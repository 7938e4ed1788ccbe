#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace orbistat::poly {

// Smallest-prime-factor sieve up to a fixed bound, plus the prime list.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint32_t bound);

  std::uint32_t bound() const { return bound_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  bool is_prime(std::uint64_t n) const;
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }

 private:
  std::uint32_t bound_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

struct IntFactorization {
  int sign = 1;  // -1, 0, or 1; sign 0 means n == 0 (no factors)
  std::vector<std::pair<std::int64_t, int>> factors;  // (prime, exponent), primes ascending

  std::int64_t value() const;
};

// Factors n completely: trial division through the table, then a primality
// certificate for any surviving cofactor.  Throws incomplete_factorization
// if the cofactor is composite and out of reach (cannot happen for
// |n| <= bound^2 or cofactor < 2^64 prime).
IntFactorization factorize_i64(std::int64_t n, const PrimeTable& table);

// v_p(n) for n != 0.
int valuation_i64(std::int64_t n, std::int64_t p);

// Squarefree kernel of n (product of primes with odd exponent, signed).
std::int64_t squarefree_kernel(std::int64_t n, const PrimeTable& table);

}  // namespace orbistat::poly
