#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "orbistat/intpoly.hpp"
#include "orbistat/prime_table.hpp"

namespace orbistat::frob {

// A frobenian set of primes described by splitting conditions on integer
// polynomials.  Membership of an individual prime is decidable by root
// counting mod p.  Every set carries a finite excluded set which always
// contains the primes dividing disc*lc of each polynomial mentioned;
// membership at excluded primes is undefined and queries throw.
class FrobenianSet {
 public:
  enum class Kind { all, has_root, root_count, splits_completely, intersection, complement };

  static FrobenianSet all_primes();
  static FrobenianSet has_root(poly::IntPoly f);
  static FrobenianSet root_count(poly::IntPoly f, int m);
  static FrobenianSet splits_completely(poly::IntPoly f);
  static FrobenianSet intersection(std::vector<FrobenianSet> sets);
  static FrobenianSet complement(FrobenianSet inner);

  // Same set with extra primes marked excluded.
  FrobenianSet with_excluded(const std::vector<std::int64_t>& extra) const;

  Kind kind() const { return kind_; }
  const std::set<std::int64_t>& excluded() const { return excluded_; }
  bool is_excluded(std::int64_t p) const { return excluded_.count(p) > 0; }
  const poly::IntPoly& polynomial() const;
  int target_count() const { return target_; }
  const std::vector<FrobenianSet>& children() const { return children_; }

  // Membership for an unexcluded prime; validation_error otherwise.
  bool contains(std::int64_t p) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::all;
  poly::IntPoly poly_;
  int target_ = 0;
  std::vector<FrobenianSet> children_;
  std::set<std::int64_t> excluded_;
};

struct DensityEstimate {
  std::int64_t cutoff = 0;
  std::int64_t hits = 0;
  std::int64_t total = 0;  // admissible primes scanned (excluded ones dropped)
  double value = 0.0;      // hits / total
};

// Relative frequency of membership among unexcluded primes <= X.
// Requires table.bound() >= X.  The scan partitions the prime range across
// workers; the merge is additive, so the result is deterministic.
DensityEstimate density_empirical(const FrobenianSet& s, std::int64_t X,
                                  const poly::PrimeTable& table);

struct DeltaEstimate {
  std::int64_t cutoff = 0;
  std::int64_t total = 0;
  std::int64_t weighted_hits = 0;  // sum over p of roots_K(p) * [roots_E(p) >= 1]
  double value = 0.0;              // 1 - weighted_hits / total
};

// Empirical delta(E, K): one minus the weighted density sum_m m * dens(p
// with m degree-one primes in K and at least one in E).  E, K irreducible.
DeltaEstimate delta_empirical(const poly::IntPoly& E, const poly::IntPoly& K,
                              std::int64_t X, const poly::PrimeTable& table);

// Whether frobenius at p fixes some component defined by e_D: the reduction
// of e_D has a root mod p.  Requires p outside the excluded primes of e_D.
bool fixes_component(const poly::IntPoly& e_D, std::int64_t p);

// Primes dividing disc(f) * lc(f); the auto-excluded set of a polynomial.
std::vector<std::int64_t> ramified_primes(const poly::IntPoly& f);

// Prime divisors of |n|, with a primality certificate on the cofactor left
// after small trial division; throws when the cofactor is out of reach.
std::vector<std::int64_t> prime_divisors_certified(Int n);

}  // namespace orbistat::frob
