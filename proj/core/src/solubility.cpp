#include "orbistat/solubility.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "orbistat/errors.hpp"
#include "orbistat/frobenian.hpp"

namespace orbistat::sol {

RationalPoint RationalPoint::make(const Int& a, const Int& b) {
  if (a == 0 && b == 0)
    throw validation_error("(0 : 0) is not a point of the projective line");
  Int g = boost::multiprecision::gcd(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b);
  RationalPoint p{a / g, b / g};
  if (p.x0 < 0 || (p.x0 == 0 && p.x1 < 0)) {
    p.x0 = -p.x0;
    p.x1 = -p.x1;
  }
  return p;
}

Int RationalPoint::height() const {
  Int a = x0 < 0 ? Int(-x0) : x0;
  Int b = x1 < 0 ? Int(-x1) : x1;
  return std::max(a, b);
}

std::string RationalPoint::str() const {
  std::ostringstream os;
  os << "(" << x0 << " : " << x1 << ")";
  return os.str();
}

Mode mode_from_string(const std::string& s) {
  if (s == "sufficient") return Mode::sufficient;
  if (s == "necessary") return Mode::necessary;
  if (s == "clique") return Mode::clique;
  throw validation_error("unknown solubility mode: " + s);
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::sufficient: return "sufficient";
    case Mode::necessary: return "necessary";
    case Mode::clique: return "clique";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::soluble: return "soluble";
    case Outcome::insoluble: return "insoluble";
    case Outcome::undetermined: return "undetermined";
  }
  return "?";
}

bool positive_span_member(std::int64_t n, const std::vector<int>& mults) {
  if (mults.empty()) return false;
  std::int64_t base = 0;
  for (int m : mults) {
    if (m < 1) throw validation_error("multiplicities must be >= 1");
    base += m;
  }
  std::int64_t r = n - base;
  if (r < 0) return false;
  if (r > 1000000) throw resource_error("span test: valuation too large");
  std::vector<char> reach(static_cast<std::size_t>(r) + 1, 0);
  reach[0] = 1;
  for (std::int64_t v = 1; v <= r; ++v)
    for (int m : mults)
      if (m <= v && reach[v - m]) {
        reach[v] = 1;
        break;
      }
  return reach[r] != 0;
}

bool clique_soluble(const orb::ClosedPointFibre& fibre, int valuation,
                    const std::vector<char>& fixed) {
  if (fibre.form.degree() != 1)
    throw validation_error("clique mode handles fibres over degree-1 points only");
  int n = static_cast<int>(fibre.components.size());
  if (n > 20) throw resource_error("clique mode: too many components");
  if (fixed.size() != fibre.components.size())
    throw validation_error("clique test: one frobenius bit per component");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [i, j] : fibre.intersections) adj[i][j] = adj[j][i] = 1;

  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    std::vector<int> mults;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!fixed[i]) {
        ok = false;
        break;
      }
      for (int j = i + 1; j < n; ++j)
        if ((mask >> j & 1) && !adj[i][j]) {
          ok = false;
          break;
        }
      mults.push_back(fibre.components[i].multiplicity);
    }
    if (ok && positive_span_member(valuation, mults)) return true;
  }
  return false;
}

LocalVerdict local_condition_at(const orb::ClosedPointFibre& fibre, int valuation,
                                std::int64_t p, Mode mode) {
  if (valuation < 1) throw validation_error("valuation must be >= 1");
  if (p < 2) throw validation_error("p must be a prime");
  LocalVerdict verdict;
  verdict.prime = p;
  verdict.point = fibre.form.str();
  verdict.valuation = valuation;

  if (fibre.split) {
    verdict.outcome = Outcome::soluble;
    return verdict;
  }

  int m = fibre.min_multiplicity();
  switch (mode) {
    case Mode::sufficient: {
      bool fixed = frob::fixes_component(fibre.min_mult_field, p);
      verdict.outcome = (fixed && valuation % m == 0) ? Outcome::soluble
                                                      : Outcome::undetermined;
      break;
    }
    case Mode::necessary: {
      if (valuation < m) {
        verdict.outcome = Outcome::insoluble;
      } else if (valuation == m &&
                 !frob::fixes_component(fibre.min_mult_field, p)) {
        verdict.outcome = Outcome::insoluble;
      } else {
        verdict.outcome = Outcome::undetermined;
      }
      break;
    }
    case Mode::clique: {
      std::vector<char> fixed(fibre.components.size());
      for (std::size_t i = 0; i < fibre.components.size(); ++i)
        fixed[i] = frob::fixes_component(fibre.components[i].field_poly, p);
      verdict.outcome = clique_soluble(fibre, valuation, fixed)
                            ? Outcome::soluble
                            : Outcome::insoluble;
      break;
    }
  }
  return verdict;
}

namespace {

std::vector<std::pair<std::int64_t, int>> factor_positive(Int h,
                                                          const poly::PrimeTable& table) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (h <= std::numeric_limits<std::int64_t>::max()) {
    auto f = poly::factorize_i64(h.convert_to<std::int64_t>(), table);
    for (const auto& [p, e] : f.factors) out.emplace_back(p, e);
    return out;
  }
  for (std::int64_t p : frob::prime_divisors_certified(h)) {
    int v = 0;
    while (h % p == 0) {
      h /= p;
      ++v;
    }
    out.emplace_back(p, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SolubilityReport soluble_away_from_s(const orb::FibrationDescriptor& desc,
                                     const RationalPoint& x, Mode mode,
                                     const poly::PrimeTable& table) {
  SolubilityReport report;
  std::map<std::int64_t, std::string> seen;

  for (const orb::ClosedPointFibre& fibre : desc.points) {
    Int h = fibre.form.evaluate(x.x0, x.x1);
    if (h == 0) {
      report.on_divisor = true;
      report.on_divisor_point = fibre.form.str();
      report.overall = false;
      return report;
    }
    if (h < 0) h = -h;
    for (const auto& [p, v] : factor_positive(h, table)) {
      if (desc.bad_primes.count(p)) continue;
      auto [it, fresh] = seen.emplace(p, fibre.form.str());
      if (!fresh)
        throw validation_error(
            "prime " + std::to_string(p) + " meets two fibres (" + it->second +
            " and " + fibre.form.str() + "); fold it into the bad set");
      report.verdicts.push_back(local_condition_at(fibre, v, p, mode));
    }
  }

  bool ok = true;
  for (const LocalVerdict& v : report.verdicts) {
    if (mode == Mode::necessary) {
      if (v.outcome == Outcome::insoluble) ok = false;
    } else {
      if (v.outcome != Outcome::soluble) ok = false;
    }
  }
  report.overall = ok;
  return report;
}

}  // namespace orbistat::sol
