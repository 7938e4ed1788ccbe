#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbistat/binary_form.hpp"
#include "orbistat/frobenian.hpp"
#include "orbistat/groups.hpp"
#include "orbistat/intpoly.hpp"
#include "orbistat/rational.hpp"

namespace orbistat::orb {

// One geometrically irreducible component of a fibre, with the (monogenic
// polynomial of the) field its conjugacy class is defined over; x stands
// for Q.
struct Component {
  std::string label;
  int multiplicity = 1;
  poly::IntPoly field_poly;
};

// The fibre of the model over a closed point of the base, cut out by an
// irreducible binary form.  min_mult_field is the field of definition of the
// set of minimal-multiplicity components.
struct ClosedPointFibre {
  poly::BinaryForm form;
  std::vector<Component> components;
  poly::IntPoly min_mult_field;
  std::vector<std::pair<int, int>> intersections;  // component index pairs
  bool split = false;  // a split fibre imposes no local condition

  int min_multiplicity() const;
  bool at_zero() const;      // form proportional to x0
  bool at_infinity() const;  // form proportional to x1
  // kappa(D): the residue field of the closed point (dehomogenized form,
  // or x for the point at infinity).
  poly::IntPoly residue_field_poly() const;
};

struct FibrationDescriptor {
  std::string name;
  std::set<std::int64_t> bad_primes;
  std::vector<ClosedPointFibre> points;

  // Irreducibility and consistency checks; folds resultants of distinct
  // forms and all field-polynomial ramified primes into bad_primes.
  void validate_and_fold();

  const ClosedPointFibre* fibre_at_zero() const;
  const ClosedPointFibre* fibre_at_infinity() const;
};

struct OrbifoldDivisor {
  struct Entry {
    poly::BinaryForm form;
    int multiplicity;  // >= 2
  };
  std::vector<Entry> entries;

  Rat degree() const;  // sum of deg(form) * (1 - 1/m)
};

// Entries with multiplicity >= 2 only (multiplicity-1 fibres contribute 0).
OrbifoldDivisor orbifold_divisor(const FibrationDescriptor& desc);

struct CanonicalDegree {
  Rat divisor_degree;             // deg(partial)
  Rat log_canonical_degree;       // -2 + deg(partial)
  bool anti_ample;                // -(K + partial) ample, i.e. deg(partial) < 2
};
CanonicalDegree canonical_degree(const OrbifoldDivisor& d);

// Exact delta(E, N) evaluation.  Rules in order:
//   1. deg E == 1: 0.
//   2. a registered pair (E, N) with explicit group data.
//   3. deg N == 1 and E registered with base group data.
//   4. E and N both of degree <= 2: decided through squarefree kernels of
//      the discriminants, with the corresponding order-2 / Klein-four data.
// Anything else throws validation_error: the resolver never derives a Galois
// group from a polynomial.
class DeltaResolver {
 public:
  void register_field(const poly::IntPoly& E, groups::FiniteGroup G,
                      const std::vector<groups::Perm>& h2_gens);
  void register_pair(const poly::IntPoly& E, const poly::IntPoly& N,
                     groups::FiniteGroup G,
                     const std::vector<groups::Perm>& h1_gens,
                     const std::vector<groups::Perm>& h2_gens);
  Rat delta(const poly::IntPoly& E, const poly::IntPoly& N) const;

 private:
  struct FieldData {
    groups::FiniteGroup G;
    groups::Subgroup H2;
  };
  struct PairData {
    groups::FiniteGroup G;
    groups::Subgroup H1, H2;
  };
  using Key = std::vector<Int>;
  std::map<Key, FieldData> fields_;
  std::map<std::pair<Key, Key>, PairData> pairs_;
};

// delta_{D,N} = 1 - delta(E_D, N); 0 when the fibre has no components.
Rat delta_dn_exact(const ClosedPointFibre& fibre, const poly::IntPoly& N,
                   const DeltaResolver& R);
double delta_dn_empirical(const ClosedPointFibre& fibre, const poly::IntPoly& N,
                          std::int64_t X, const poly::PrimeTable& table);

// Delta(pi) = sum over non-split fibres of (1 - delta_{D,kappa(D)})
//           = sum of delta(E_D, kappa(D)).
Rat delta_exponent_exact(const FibrationDescriptor& desc, const DeltaResolver& R);
double delta_exponent_empirical(const FibrationDescriptor& desc, std::int64_t X,
                                const poly::PrimeTable& table);

// Theta_v(pi) = sum over fibres D, and over the distinct irreducible factors
// N of the specialized form g(v0 x^d, v1), of delta(E_D, N); for a fibre
// whose form vanishes at infinity the single factor is Q.
Rat theta_v_exact(const FibrationDescriptor& desc, int d, const Int& v0,
                  const Int& v1, const DeltaResolver& R);
double theta_v_empirical(const FibrationDescriptor& desc, int d, const Int& v0,
                         const Int& v1, std::int64_t X,
                         const poly::PrimeTable& table);

struct ThetaMin {
  Rat value;
  Int v0, v1;       // arg min, v1 d-power-free over the support
  bool trivial_d;   // d == 1, where the only class is v = 1 and Theta = Delta
};

// Minimum of Theta_v over v = +-prod p^e (p in support, 0 <= e < d), ties
// broken by smallest |v|, positive sign first.
ThetaMin theta_min_exact(const FibrationDescriptor& desc, int d,
                         const std::vector<std::int64_t>& support,
                         const DeltaResolver& R);

struct PredictedExponents {
  Rat divisor_degree;
  Rat b_exponent;  // 2 - deg(partial)
  bool anti_ample;
  Rat delta;
  int twist_degree = 1;  // gcd of the coordinate multiplicities, when defined
  std::optional<Rat> theta;
  std::optional<std::pair<Int, Int>> theta_argmin;
};

// theta is computed when every multiple fibre sits over 0 or infinity.
PredictedExponents predicted_exponents(const FibrationDescriptor& desc,
                                       const DeltaResolver& R);

// e2 / gcd(e1, e2): ramification of the normalized base change of orders
// e1, e2.
int normalized_ramification(int e1, int e2);
// m / gcd(m, e): multiplicity of a component above a multiplicity-m fibre
// under a degree-e covering map; the pullback is etale over the orbifold
// divisor exactly when e | m.
int pullback_multiplicity(int m, int e);
bool etale_at(int e, int m);

struct RhBasePoint {
  int multiplicity = 1;              // m_P of the base orbifold divisor
  std::vector<int> profile;          // ramification indices of the points above
};

struct RhComparison {
  Rat lhs;   // deg K_{C', partial'}
  Rat rhs;   // d * deg K_{C, partial}
  bool equal;
};

// All ramification of the cover must happen over the listed points; every
// profile must sum to d.  lhs - rhs = sum over P, P' of (e/m_P - 1/m_{P'}),
// which is >= 0, with equality exactly when every e divides its m_P.
RhComparison rh_compare(int genus, const std::vector<RhBasePoint>& base, int d);

}  // namespace orbistat::orb
