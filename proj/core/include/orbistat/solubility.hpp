#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbistat/fibration.hpp"
#include "orbistat/prime_table.hpp"
#include "orbistat/rational.hpp"

namespace orbistat::sol {

// A point of P^1(Q) in lowest terms: gcd(x0, x1) = 1 and either x0 > 0 or
// (x0, x1) = (0, 1).
struct RationalPoint {
  Int x0, x1;

  static RationalPoint make(const Int& a, const Int& b);
  Int height() const;
  std::string str() const;
};

enum class Mode { sufficient, necessary, clique };
enum class Outcome { soluble, insoluble, undetermined };

Mode mode_from_string(const std::string& s);
std::string to_string(Mode m);
std::string to_string(Outcome o);

struct LocalVerdict {
  std::int64_t prime = 0;
  std::string point;  // form of the fibre met at p
  int valuation = 0;
  Outcome outcome = Outcome::undetermined;
};

struct SolubilityReport {
  bool overall = false;
  std::vector<LocalVerdict> verdicts;
  bool on_divisor = false;  // the point lies on a listed fibre
  std::string on_divisor_point;
};

// Whether n is sum a_i * m_i with every a_i >= 1, over the given
// multiplicities.
bool positive_span_member(std::int64_t n, const std::vector<int>& mults);

// The clique test with precomputed frobenius bits, one per component:
// soluble iff some pairwise-intersecting set of fixed components spans the
// valuation positively by their multiplicities.
bool clique_soluble(const orb::ClosedPointFibre& fibre, int valuation,
                    const std::vector<char>& fixed);

// The local test at p for a point meeting the fibre with valuation v >= 1.
//   sufficient: soluble when frobenius fixes a minimal component and m_D | v.
//   necessary:  insoluble when v < m_D, or v == m_D and no minimal component
//               is fixed.
//   clique:     decides: soluble iff some pairwise-intersecting set of
//               frobenius-fixed components spans v positively by their
//               multiplicities.  Degree-1 fibres only; each listed component
//               counts as fixed when its field polynomial has a root mod p.
// p must lie outside the excluded primes of the fields involved.
LocalVerdict local_condition_at(const orb::ClosedPointFibre& fibre, int valuation,
                                std::int64_t p, Mode mode);

// Runs the local test at every prime p outside bad_primes dividing some
// fibre value h_D(x).  overall: in sufficient and clique modes, all tested
// places soluble; in necessary mode, no place insoluble.  A point lying on
// a listed fibre is flagged instead of tested.
SolubilityReport soluble_away_from_s(const orb::FibrationDescriptor& desc,
                                     const RationalPoint& x, Mode mode,
                                     const poly::PrimeTable& table);

}  // namespace orbistat::sol
