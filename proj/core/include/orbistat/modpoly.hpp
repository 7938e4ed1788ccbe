#pragma once

#include <cstdint>
#include <vector>

#include "orbistat/intpoly.hpp"

namespace orbistat::poly {

// Dense polynomial over F_p, p an odd-or-2 prime < 2^31, coefficients in
// [0, p).  Constant-first, trimmed.  Internal workhorse for root counting
// mod p and for the modular stage of rational factorization.
struct ModPoly {
  std::int64_t p = 0;
  std::vector<std::int64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim();
};

ModPoly mod_reduce(const IntPoly& f, std::int64_t p);
ModPoly mod_mul(const ModPoly& a, const ModPoly& b);
ModPoly mod_rem(const ModPoly& a, const ModPoly& m);   // m monic or unit lc
ModPoly mod_gcd(ModPoly a, ModPoly b);                 // monic result
ModPoly mod_monic(const ModPoly& a);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b);
// x^e mod m via square and multiply.
ModPoly mod_xpow(std::int64_t e, const ModPoly& m);

// Number of roots of f in F_p, multiplicity-free: deg gcd(x^p - x, f).
// Requires p prime, f nonzero mod p.  Counts each root once.
int count_roots_modpoly(const ModPoly& f);

// Number of distinct roots in F_p of the reduction of f mod p.
// Throws validation_error if p divides lc(f) or f vanishes mod p.
int count_roots_mod_p(const IntPoly& f, std::int64_t p);

// Roots of f mod p by direct scan; O(p deg).  Testing oracle.
std::vector<std::int64_t> roots_mod_p_scan(const ModPoly& f);

// Distinct monic irreducible factors with multiplicities of a monic f mod p.
// Deterministic Berlekamp (kernel basis + gcd splitting over c in F_p);
// intended for the small good primes of the rational factorization.
std::vector<std::pair<ModPoly, int>> mod_factor(const ModPoly& f);

}  // namespace orbistat::poly
