#include "orbistat/fibration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "orbistat/errors.hpp"
#include "orbistat/poly_factor.hpp"

namespace orbistat::orb {

namespace {

poly::IntPoly normalize_field_poly(const poly::IntPoly& f) {
  if (f.degree() < 1) throw validation_error("field polynomial must have degree >= 1");
  return f.primitive_part();
}

std::vector<Int> poly_key(const poly::IntPoly& f) {
  poly::IntPoly g = normalize_field_poly(f);
  std::vector<Int> key;
  for (int i = 0; i <= g.degree(); ++i) key.push_back(g.coeff(i));
  return key;
}

void require_irreducible(const poly::IntPoly& f, const std::string& what) {
  if (f.degree() < 1)
    throw validation_error(what + ": degree must be >= 1");
  if (f.degree() > 1 && !poly::is_irreducible_over_q(f))
    throw validation_error(what + ": polynomial " + f.str() + " is reducible");
}

// Squarefree kernel of a discriminant, sign included.
Int squarefree_kernel_int(const Int& n) {
  if (n == 0) throw validation_error("squarefree kernel of zero");
  Int m = n < 0 ? Int(-n) : n;
  Int kern = n < 0 ? Int(-1) : Int(1);
  for (std::int64_t p : frob::prime_divisors_certified(m)) {
    int v = 0;
    while (m % p == 0) {
      m /= p;
      ++v;
    }
    if (v % 2 == 1) kern *= p;
  }
  return kern;
}

Int quadratic_disc(const poly::IntPoly& f) {
  return f.coeff(1) * f.coeff(1) - 4 * f.coeff(2) * f.coeff(0);
}

groups::FiniteGroup make_c2() {
  return groups::FiniteGroup::close_generators(2, {groups::Perm{1, 0}});
}

groups::FiniteGroup make_v4() {
  return groups::FiniteGroup::close_generators(
      4, {groups::Perm{1, 0, 3, 2}, groups::Perm{2, 3, 0, 1}});
}

}  // namespace

int ClosedPointFibre::min_multiplicity() const {
  if (components.empty()) return 1;
  int m = components.front().multiplicity;
  for (const Component& c : components) m = std::min(m, c.multiplicity);
  return m;
}

bool ClosedPointFibre::at_zero() const {
  return form.degree() == 1 && form.coeff(0) == 0;
}

bool ClosedPointFibre::at_infinity() const {
  return form.degree() == 1 && form.coeff(1) == 0;
}

poly::IntPoly ClosedPointFibre::residue_field_poly() const {
  if (at_infinity()) return poly::poly_x();
  return form.dehomogenize();
}

void FibrationDescriptor::validate_and_fold() {
  for (std::int64_t p : bad_primes)
    if (p < 2) throw validation_error("bad prime " + std::to_string(p) + " is not a prime");
  auto fold = [&](const std::vector<std::int64_t>& ps) {
    bad_primes.insert(ps.begin(), ps.end());
  };

  for (ClosedPointFibre& fibre : points) {
    const poly::BinaryForm& g = fibre.form;
    if (g.degree() < 1)
      throw validation_error("fibre form must be a nonzero form of degree >= 1");
    Int cont = 0;
    for (int k = 0; k <= g.degree(); ++k)
      cont = boost::multiprecision::gcd(cont, g.coeff(k));
    if (cont != 1)
      throw validation_error("fibre form " + g.str() + " is not primitive");
    if (g.degree() >= 2) {
      if (g.coeff(g.degree()) == 0 || g.coeff(0) == 0)
        throw validation_error("fibre form " + g.str() +
                               " is divisible by a coordinate");
      require_irreducible(g.dehomogenize(), "fibre form");
      fold(frob::ramified_primes(g.dehomogenize()));
    }

    if (fibre.components.empty() && !fibre.split)
      throw validation_error("non-split fibre over " + g.str() +
                             " needs at least one component");
    std::set<std::string> labels;
    for (const Component& c : fibre.components) {
      if (c.label.empty())
        throw validation_error("component label must be nonempty");
      if (!labels.insert(c.label).second)
        throw validation_error("duplicate component label " + c.label);
      if (c.multiplicity < 1)
        throw validation_error("component multiplicity must be >= 1");
      require_irreducible(c.field_poly, "component field");
      fold(frob::ramified_primes(c.field_poly));
    }
    require_irreducible(fibre.min_mult_field, "minimal-multiplicity field");
    fold(frob::ramified_primes(fibre.min_mult_field));

    std::set<std::pair<int, int>> seen;
    for (auto& [i, j] : fibre.intersections) {
      int n = static_cast<int>(fibre.components.size());
      if (i < 0 || j < 0 || i >= n || j >= n)
        throw validation_error("intersection index out of range");
      if (i == j) throw validation_error("a component cannot intersect itself");
      if (i > j) std::swap(i, j);
      if (!seen.insert({i, j}).second)
        throw validation_error("duplicate intersection pair");
    }
  }

  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].form.proportional_to(points[b].form))
        throw validation_error("two fibres over the same closed point " +
                               points[a].form.str());
      Int res = poly::form_resultant(points[a].form, points[b].form);
      fold(frob::prime_divisors_certified(res));
    }
}

const ClosedPointFibre* FibrationDescriptor::fibre_at_zero() const {
  for (const ClosedPointFibre& f : points)
    if (f.at_zero()) return &f;
  return nullptr;
}

const ClosedPointFibre* FibrationDescriptor::fibre_at_infinity() const {
  for (const ClosedPointFibre& f : points)
    if (f.at_infinity()) return &f;
  return nullptr;
}

Rat OrbifoldDivisor::degree() const {
  Rat d = 0;
  for (const Entry& e : entries)
    d += Rat(e.form.degree()) * (Rat(1) - Rat(1, e.multiplicity));
  return d;
}

OrbifoldDivisor orbifold_divisor(const FibrationDescriptor& desc) {
  OrbifoldDivisor d;
  for (const ClosedPointFibre& f : desc.points) {
    int m = f.min_multiplicity();
    if (m >= 2) d.entries.push_back({f.form, m});
  }
  return d;
}

CanonicalDegree canonical_degree(const OrbifoldDivisor& d) {
  CanonicalDegree c;
  c.divisor_degree = d.degree();
  c.log_canonical_degree = c.divisor_degree - 2;
  c.anti_ample = c.log_canonical_degree < 0;
  return c;
}

void DeltaResolver::register_field(const poly::IntPoly& E, groups::FiniteGroup G,
                                   const std::vector<groups::Perm>& h2_gens) {
  FieldData d{std::move(G), {}};
  d.H2 = groups::subgroup_from_perms(d.G, h2_gens);
  fields_.insert_or_assign(poly_key(E), std::move(d));
}

void DeltaResolver::register_pair(const poly::IntPoly& E, const poly::IntPoly& N,
                                  groups::FiniteGroup G,
                                  const std::vector<groups::Perm>& h1_gens,
                                  const std::vector<groups::Perm>& h2_gens) {
  PairData d{std::move(G), {}, {}};
  d.H1 = groups::subgroup_from_perms(d.G, h1_gens);
  d.H2 = groups::subgroup_from_perms(d.G, h2_gens);
  pairs_.insert_or_assign(std::make_pair(poly_key(E), poly_key(N)), std::move(d));
}

Rat DeltaResolver::delta(const poly::IntPoly& E, const poly::IntPoly& N) const {
  if (E.degree() < 1 || N.degree() < 1)
    throw validation_error("delta: both fields need degree >= 1");
  if (E.degree() == 1) return Rat(0);

  auto pit = pairs_.find(std::make_pair(poly_key(E), poly_key(N)));
  if (pit != pairs_.end()) {
    const PairData& d = pit->second;
    return groups::delta_group(d.G, d.H1, d.H2);
  }

  if (N.degree() == 1) {
    auto fit = fields_.find(poly_key(E));
    if (fit != fields_.end()) {
      const FieldData& d = fit->second;
      return groups::delta_group(d.G, groups::whole_group(d.G), d.H2);
    }
  }

  if (E.degree() == 2 && N.degree() <= 2) {
    groups::Subgroup trivial{{0}};
    if (N.degree() == 1) {
      groups::FiniteGroup c2 = make_c2();
      groups::Subgroup t{{c2.identity_index()}};
      return groups::delta_group(c2, groups::whole_group(c2), t);
    }
    Int ke = squarefree_kernel_int(quadratic_disc(E));
    Int kn = squarefree_kernel_int(quadratic_disc(N));
    if (ke == kn) {
      groups::FiniteGroup c2 = make_c2();
      groups::Subgroup t{{c2.identity_index()}};
      return groups::delta_group(c2, t, t);
    }
    groups::FiniteGroup v4 = make_v4();
    groups::Subgroup h1 = groups::subgroup_from_perms(v4, {groups::Perm{2, 3, 0, 1}});
    groups::Subgroup h2 = groups::subgroup_from_perms(v4, {groups::Perm{1, 0, 3, 2}});
    return groups::delta_group(v4, h1, h2);
  }

  throw validation_error("delta: no group data registered for E = " + E.str() +
                         ", N = " + N.str());
}

Rat delta_dn_exact(const ClosedPointFibre& fibre, const poly::IntPoly& N,
                   const DeltaResolver& R) {
  if (fibre.split) return Rat(1);
  return Rat(1) - R.delta(fibre.min_mult_field, N);
}

double delta_dn_empirical(const ClosedPointFibre& fibre, const poly::IntPoly& N,
                          std::int64_t X, const poly::PrimeTable& table) {
  if (fibre.split) return 1.0;
  if (fibre.min_mult_field.degree() == 1 && N.degree() == 1) return 1.0;
  return 1.0 - frob::delta_empirical(fibre.min_mult_field, N, X, table).value;
}

Rat delta_exponent_exact(const FibrationDescriptor& desc, const DeltaResolver& R) {
  Rat sum = 0;
  for (const ClosedPointFibre& f : desc.points) {
    if (f.split) continue;
    sum += Rat(1) - delta_dn_exact(f, f.residue_field_poly(), R);
  }
  return sum;
}

double delta_exponent_empirical(const FibrationDescriptor& desc, std::int64_t X,
                                const poly::PrimeTable& table) {
  double sum = 0;
  for (const ClosedPointFibre& f : desc.points) {
    if (f.split) continue;
    sum += 1.0 - delta_dn_empirical(f, f.residue_field_poly(), X, table);
  }
  return sum;
}

namespace {

// Distinct irreducible factors of the fibre form specialized along
// x = v0 t^d / v1; an empty optional encodes the single factor Q (the fibre
// at infinity).
std::vector<poly::IntPoly> specialized_factors(const ClosedPointFibre& fibre,
                                               int d, const Int& v0, const Int& v1) {
  if (fibre.at_infinity()) return {poly::poly_x()};
  poly::IntPoly gd = fibre.form.specialize(d, v0, v1);
  std::vector<poly::IntPoly> out;
  for (const auto& [fac, mult] : poly::factor_over_q(gd).factors) out.push_back(fac);
  return out;
}

}  // namespace

Rat theta_v_exact(const FibrationDescriptor& desc, int d, const Int& v0,
                  const Int& v1, const DeltaResolver& R) {
  if (d < 1) throw validation_error("theta: twist degree must be >= 1");
  if (v0 == 0 || v1 == 0) throw validation_error("theta: v must be nonzero");
  Rat sum = 0;
  for (const ClosedPointFibre& f : desc.points) {
    if (f.split || f.min_mult_field.degree() == 1) continue;
    for (const poly::IntPoly& N : specialized_factors(f, d, v0, v1))
      sum += R.delta(f.min_mult_field, N);
  }
  return sum;
}

double theta_v_empirical(const FibrationDescriptor& desc, int d, const Int& v0,
                         const Int& v1, std::int64_t X,
                         const poly::PrimeTable& table) {
  if (d < 1) throw validation_error("theta: twist degree must be >= 1");
  if (v0 == 0 || v1 == 0) throw validation_error("theta: v must be nonzero");
  double sum = 0;
  for (const ClosedPointFibre& f : desc.points) {
    if (f.split || f.min_mult_field.degree() == 1) continue;
    for (const poly::IntPoly& N : specialized_factors(f, d, v0, v1))
      sum += frob::delta_empirical(f.min_mult_field, N, X, table).value;
  }
  return sum;
}

ThetaMin theta_min_exact(const FibrationDescriptor& desc, int d,
                         const std::vector<std::int64_t>& support,
                         const DeltaResolver& R) {
  if (d < 1) throw validation_error("theta: twist degree must be >= 1");
  ThetaMin out;
  if (d == 1) {
    out.value = theta_v_exact(desc, 1, 1, 1, R);
    out.v0 = 1;
    out.v1 = 1;
    out.trivial_d = true;
    return out;
  }
  out.trivial_d = false;

  std::vector<std::int64_t> supp(support);
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  double combos = 1;
  for (std::size_t i = 0; i < supp.size(); ++i) combos *= d;
  if (combos > 20000)
    throw resource_error("theta scan: too many twist classes over the support");

  std::vector<Int> magnitudes;
  std::vector<int> expo(supp.size(), 0);
  while (true) {
    Int v = 1;
    for (std::size_t i = 0; i < supp.size(); ++i)
      for (int e = 0; e < expo[i]; ++e) v *= supp[i];
    magnitudes.push_back(v);
    std::size_t i = 0;
    while (i < supp.size() && expo[i] == d - 1) expo[i++] = 0;
    if (i == supp.size()) break;
    ++expo[i];
  }
  std::sort(magnitudes.begin(), magnitudes.end());
  magnitudes.erase(std::unique(magnitudes.begin(), magnitudes.end()),
                   magnitudes.end());

  bool first = true;
  for (const Int& mag : magnitudes)
    for (int sign : {+1, -1}) {
      Int v = sign * mag;
      Rat theta = theta_v_exact(desc, d, v, 1, R);
      if (first || theta < out.value) {
        out.value = theta;
        out.v0 = v;
        out.v1 = 1;
        first = false;
      }
    }
  return out;
}

PredictedExponents predicted_exponents(const FibrationDescriptor& desc,
                                       const DeltaResolver& R) {
  PredictedExponents out;
  CanonicalDegree cd = canonical_degree(orbifold_divisor(desc));
  out.divisor_degree = cd.divisor_degree;
  out.b_exponent = Rat(2) - cd.divisor_degree;
  out.anti_ample = cd.anti_ample;
  out.delta = delta_exponent_exact(desc, R);

  bool coordinate_only = true;
  for (const ClosedPointFibre& f : desc.points)
    if (f.min_multiplicity() >= 2 && !f.at_zero() && !f.at_infinity())
      coordinate_only = false;
  if (coordinate_only) {
    const ClosedPointFibre* z = desc.fibre_at_zero();
    const ClosedPointFibre* i = desc.fibre_at_infinity();
    int m0 = z ? z->min_multiplicity() : 1;
    int m1 = i ? i->min_multiplicity() : 1;
    out.twist_degree = std::gcd(m0, m1);
    std::vector<std::int64_t> supp(desc.bad_primes.begin(), desc.bad_primes.end());
    ThetaMin tm = theta_min_exact(desc, out.twist_degree, supp, R);
    out.theta = tm.value;
    out.theta_argmin = std::make_pair(tm.v0, tm.v1);
  }
  return out;
}

int normalized_ramification(int e1, int e2) {
  if (e1 < 1 || e2 < 1) throw validation_error("ramification orders must be >= 1");
  return e2 / std::gcd(e1, e2);
}

int pullback_multiplicity(int m, int e) {
  if (m < 1 || e < 1) throw validation_error("multiplicities must be >= 1");
  return m / std::gcd(m, e);
}

bool etale_at(int e, int m) {
  if (m < 1 || e < 1) throw validation_error("multiplicities must be >= 1");
  return m % e == 0;
}

RhComparison rh_compare(int genus, const std::vector<RhBasePoint>& base, int d) {
  if (genus < 0) throw validation_error("genus must be >= 0");
  if (d < 1) throw validation_error("covering degree must be >= 1");

  Rat base_deg = 2 * genus - 2;
  int ram_total = 0;
  for (const RhBasePoint& P : base) {
    if (P.multiplicity < 1)
      throw validation_error("orbifold multiplicity must be >= 1");
    int sum = 0;
    for (int e : P.profile) {
      if (e < 1) throw validation_error("ramification index must be >= 1");
      sum += e;
      ram_total += e - 1;
    }
    if (sum != d)
      throw validation_error("ramification profile must sum to the degree");
    base_deg += Rat(1) - Rat(1, P.multiplicity);
  }

  int two_gp_minus_2 = d * (2 * genus - 2) + ram_total;
  if (two_gp_minus_2 % 2 != 0 || two_gp_minus_2 < -2)
    throw validation_error("no cover with this ramification exists");

  RhComparison out;
  out.rhs = Rat(d) * base_deg;
  out.lhs = two_gp_minus_2;
  for (const RhBasePoint& P : base)
    for (int e : P.profile) {
      int mp = pullback_multiplicity(P.multiplicity, e);
      out.lhs += Rat(1) - Rat(1, mp);
    }
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace orbistat::orb
