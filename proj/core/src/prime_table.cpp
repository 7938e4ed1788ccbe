#include "orbistat/prime_table.hpp"

#include <algorithm>
#include <cmath>

#include "orbistat/errors.hpp"

namespace orbistat::poly {

PrimeTable::PrimeTable(std::uint32_t bound) : bound_(bound) {
  if (bound < 2) throw validation_error("prime table bound must be >= 2");
  spf_.assign(bound + 1, 0);
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      if (p > spf_[i]) break;
      std::uint64_t q = static_cast<std::uint64_t>(p) * i;
      if (q > bound) break;
      spf_[q] = p;
    }
  }
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n <= bound_) return n >= 2 && spf_[n] == n;
  return is_prime_u64(n);
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // This base set is a proven witness family for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::int64_t IntFactorization::value() const {
  if (sign == 0) return 0;
  std::int64_t v = sign;
  for (auto [p, e] : factors)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

IntFactorization factorize_i64(std::int64_t n, const PrimeTable& table) {
  IntFactorization out;
  if (n == 0) {
    out.sign = 0;
    return out;
  }
  out.sign = n < 0 ? -1 : 1;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                          : static_cast<std::uint64_t>(n);
  if (m <= table.bound()) {
    while (m > 1) {
      std::uint32_t p = table.spf(static_cast<std::uint32_t>(m));
      int e = 0;
      while (m % p == 0) m /= p, ++e;
      out.factors.emplace_back(p, e);
    }
    return out;
  }
  for (std::uint32_t p : table.primes()) {
    if (static_cast<std::uint64_t>(p) * p > m) break;
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) m /= p, ++e;
      out.factors.emplace_back(p, e);
      if (m <= table.bound()) {
        while (m > 1) {
          std::uint32_t q = table.spf(static_cast<std::uint32_t>(m));
          int f = 0;
          while (m % q == 0) m /= q, ++f;
          out.factors.emplace_back(q, f);
        }
        std::sort(out.factors.begin(), out.factors.end());
        return out;
      }
    }
  }
  if (m > 1) {
    std::uint64_t b = table.bound();
    if (m <= b * b || is_prime_u64(m)) {
      // No prime factor <= min(bound, sqrt(m)) survived, so m is prime
      // whenever m <= bound^2; otherwise the certificate decides.
      if (!table.is_prime(m))
        throw incomplete_factorization(
            "cofactor is composite and exceeds the trial-division range");
      out.factors.emplace_back(static_cast<std::int64_t>(m), 1);
    } else {
      throw incomplete_factorization(
          "cofactor is composite and exceeds the trial-division range");
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

int valuation_i64(std::int64_t n, std::int64_t p) {
  if (n == 0) throw validation_error("valuation of 0 is undefined");
  int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

std::int64_t squarefree_kernel(std::int64_t n, const PrimeTable& table) {
  IntFactorization f = factorize_i64(n, table);
  if (f.sign == 0) throw validation_error("squarefree kernel of 0 is undefined");
  std::int64_t k = f.sign;
  for (auto [p, e] : f.factors)
    if (e % 2 == 1) k *= p;
  return k;
}

}  // namespace orbistat::poly
