#include "orbistat/frobenian.hpp"

#include <sstream>

#include "orbistat/errors.hpp"
#include "orbistat/modpoly.hpp"
#include "orbistat/parallel.hpp"
#include "orbistat/poly_factor.hpp"

namespace orbistat::frob {

namespace {

const poly::PrimeTable& scratch_table() {
  static poly::PrimeTable t(1u << 20);
  return t;
}

}  // namespace

// Prime divisors of |n| for a cpp_int: trial division through the scratch
// table, then a primality certificate on the survivor.
std::vector<std::int64_t> prime_divisors_certified(Int n) {
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  if (n <= 1) return out;
  for (std::uint32_t p : scratch_table().primes()) {
    if (Int(p) * p > n) break;
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) {
    if (n > Int("18446744073709551615"))
      throw validation_error(
          "excluded-set computation: discriminant cofactor too large to certify");
    std::uint64_t m = n.template convert_to<std::uint64_t>();
    if (!poly::is_prime_u64(m))
      throw validation_error(
          "excluded-set computation: composite cofactor out of reach");
    out.push_back(static_cast<std::int64_t>(m));
  }
  return out;
}

std::vector<std::int64_t> ramified_primes(const poly::IntPoly& f) {
  if (f.degree() < 1) return {};
  Int d = poly::discriminant(f);
  if (d == 0)
    throw validation_error("ramified_primes: polynomial is not squarefree");
  return prime_divisors_certified(d * f.lc());
}

FrobenianSet FrobenianSet::all_primes() { return FrobenianSet(); }

FrobenianSet FrobenianSet::has_root(poly::IntPoly f) {
  if (f.degree() < 1) throw validation_error("has_root: degree must be >= 1");
  FrobenianSet s;
  s.kind_ = Kind::has_root;
  for (std::int64_t p : ramified_primes(f)) s.excluded_.insert(p);
  s.poly_ = std::move(f);
  return s;
}

FrobenianSet FrobenianSet::root_count(poly::IntPoly f, int m) {
  if (f.degree() < 1) throw validation_error("root_count: degree must be >= 1");
  if (m < 0 || m > f.degree())
    throw validation_error("root_count: target out of range");
  FrobenianSet s;
  s.kind_ = Kind::root_count;
  s.target_ = m;
  for (std::int64_t p : ramified_primes(f)) s.excluded_.insert(p);
  s.poly_ = std::move(f);
  return s;
}

FrobenianSet FrobenianSet::splits_completely(poly::IntPoly f) {
  if (f.degree() < 1)
    throw validation_error("splits_completely: degree must be >= 1");
  FrobenianSet s;
  s.kind_ = Kind::splits_completely;
  for (std::int64_t p : ramified_primes(f)) s.excluded_.insert(p);
  s.poly_ = std::move(f);
  return s;
}

FrobenianSet FrobenianSet::intersection(std::vector<FrobenianSet> sets) {
  FrobenianSet s;
  s.kind_ = Kind::intersection;
  for (const FrobenianSet& c : sets)
    s.excluded_.insert(c.excluded_.begin(), c.excluded_.end());
  s.children_ = std::move(sets);
  return s;
}

FrobenianSet FrobenianSet::complement(FrobenianSet inner) {
  FrobenianSet s;
  s.kind_ = Kind::complement;
  s.excluded_ = inner.excluded_;
  s.children_.push_back(std::move(inner));
  return s;
}

FrobenianSet FrobenianSet::with_excluded(
    const std::vector<std::int64_t>& extra) const {
  FrobenianSet s = *this;
  s.excluded_.insert(extra.begin(), extra.end());
  return s;
}

const poly::IntPoly& FrobenianSet::polynomial() const {
  if (kind_ != Kind::has_root && kind_ != Kind::root_count &&
      kind_ != Kind::splits_completely)
    throw validation_error("this frobenian set has no polynomial");
  return poly_;
}

bool FrobenianSet::contains(std::int64_t p) const {
  if (is_excluded(p))
    throw validation_error("frobenian membership undefined at excluded prime " +
                           std::to_string(p));
  switch (kind_) {
    case Kind::all:
      return true;
    case Kind::has_root:
      return poly::count_roots_mod_p(poly_, p) >= 1;
    case Kind::root_count:
      return poly::count_roots_mod_p(poly_, p) == target_;
    case Kind::splits_completely:
      return poly::count_roots_mod_p(poly_, p) == poly_.degree();
    case Kind::intersection: {
      for (const FrobenianSet& c : children_)
        if (!c.contains(p)) return false;
      return true;
    }
    case Kind::complement:
      return !children_[0].contains(p);
  }
  return false;
}

std::string FrobenianSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::all:
      os << "all primes";
      break;
    case Kind::has_root:
      os << "{p : " << poly_.str() << " has a root mod p}";
      break;
    case Kind::root_count:
      os << "{p : " << poly_.str() << " has exactly " << target_
         << " roots mod p}";
      break;
    case Kind::splits_completely:
      os << "{p : " << poly_.str() << " splits completely mod p}";
      break;
    case Kind::intersection: {
      os << "intersection(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) os << ", ";
        os << children_[i].describe();
      }
      os << ")";
      break;
    }
    case Kind::complement:
      os << "complement(" << children_[0].describe() << ")";
      break;
  }
  return os.str();
}

DensityEstimate density_empirical(const FrobenianSet& s, std::int64_t X,
                                  const poly::PrimeTable& table) {
  if (X < 2) throw validation_error("density cutoff must be >= 2");
  if (static_cast<std::int64_t>(table.bound()) < X)
    throw validation_error("prime table bound below density cutoff");
  const auto& primes = table.primes();
  std::int64_t np = 0;
  while (np < static_cast<std::int64_t>(primes.size()) &&
         primes[np] <= static_cast<std::uint64_t>(X))
    ++np;
  struct Acc {
    std::int64_t hits = 0, total = 0;
  };
  Acc r = parallel_range(
      std::int64_t(0), np, Acc{},
      [&](std::int64_t lo, std::int64_t hi, Acc& a) {
        for (std::int64_t i = lo; i < hi; ++i) {
          std::int64_t p = primes[i];
          if (s.is_excluded(p)) continue;
          ++a.total;
          if (s.contains(p)) ++a.hits;
        }
      },
      [](Acc& out, const Acc& a) {
        out.hits += a.hits;
        out.total += a.total;
      });
  DensityEstimate d;
  d.cutoff = X;
  d.hits = r.hits;
  d.total = r.total;
  d.value = r.total ? static_cast<double>(r.hits) / r.total : 0.0;
  return d;
}

DeltaEstimate delta_empirical(const poly::IntPoly& E, const poly::IntPoly& K,
                              std::int64_t X, const poly::PrimeTable& table) {
  if (!poly::is_irreducible_over_q(E) || !poly::is_irreducible_over_q(K))
    throw validation_error("delta_empirical: both fields must be irreducible");
  if (static_cast<std::int64_t>(table.bound()) < X)
    throw validation_error("prime table bound below delta cutoff");
  std::set<std::int64_t> excl;
  for (std::int64_t p : ramified_primes(E)) excl.insert(p);
  for (std::int64_t p : ramified_primes(K)) excl.insert(p);
  const auto& primes = table.primes();
  std::int64_t np = 0;
  while (np < static_cast<std::int64_t>(primes.size()) &&
         primes[np] <= static_cast<std::uint64_t>(X))
    ++np;
  struct Acc {
    std::int64_t w = 0, total = 0;
  };
  Acc r = parallel_range(
      std::int64_t(0), np, Acc{},
      [&](std::int64_t lo, std::int64_t hi, Acc& a) {
        for (std::int64_t i = lo; i < hi; ++i) {
          std::int64_t p = primes[i];
          if (excl.count(p)) continue;
          ++a.total;
          int rk = K.degree() == 1 ? 1 : poly::count_roots_mod_p(K, p);
          if (rk == 0) continue;
          int re = E.degree() == 1 ? 1 : poly::count_roots_mod_p(E, p);
          if (re >= 1) a.w += rk;
        }
      },
      [](Acc& out, const Acc& a) {
        out.w += a.w;
        out.total += a.total;
      });
  DeltaEstimate d;
  d.cutoff = X;
  d.total = r.total;
  d.weighted_hits = r.w;
  d.value = r.total ? 1.0 - static_cast<double>(r.w) / r.total : 0.0;
  return d;
}

bool fixes_component(const poly::IntPoly& e_D, std::int64_t p) {
  if (e_D.degree() < 1)
    throw validation_error("fixes_component: field polynomial has degree 0");
  if (e_D.degree() == 1) return true;
  return poly::count_roots_mod_p(e_D, p) >= 1;
}

}  // namespace orbistat::frob
