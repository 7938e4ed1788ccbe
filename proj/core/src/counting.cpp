#include "orbistat/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "orbistat/errors.hpp"
#include "orbistat/modpoly.hpp"
#include "orbistat/parallel.hpp"

namespace orbistat::count {

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

// Membership of an unexcluded prime; excluded primes count as non-members
// (the caller reports them through `warned` lists).
bool member(const frob::FrobenianSet& P, std::int64_t p) {
  if (P.is_excluded(p)) return false;
  return P.contains(p);
}

std::vector<std::int64_t> excluded_outside_s(const frob::FrobenianSet& P,
                                             const std::set<std::int64_t>& S) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : P.excluded())
    if (!S.count(p)) out.push_back(p);
  return out;
}

std::int64_t ipow_checked(std::int64_t b, int e, std::int64_t cap) {
  if (b == 0) return e == 0 ? 1 : 0;
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

std::int64_t iroot(std::int64_t n, int m) {
  if (n < 1) return 0;
  auto r = static_cast<std::int64_t>(std::pow(static_cast<double>(n), 1.0 / m));
  while (r > 0 && ipow_checked(r, m, n) > n) --r;
  while (ipow_checked(r + 1, m, n) <= n) ++r;
  return r;
}

// Per-prime admissibility flags over [0, B]: flags[p] != 0 for a prime p
// means every full p-power block is allowed on that side.
std::vector<char> side_flags(const frob::FrobenianSet& P,
                             const std::set<std::int64_t>& S, std::int64_t B,
                             const poly::PrimeTable& table) {
  std::vector<char> flags(static_cast<std::size_t>(B) + 1, 0);
  const auto& primes = table.primes();
  std::int64_t np = 0;
  while (np < static_cast<std::int64_t>(primes.size()) && primes[np] <= B) ++np;
  parallel_range<int>(
      0, np, 0,
      [&](std::int64_t lo, std::int64_t hi, int&) {
        for (std::int64_t i = lo; i < hi; ++i) {
          std::int64_t p = primes[i];
          flags[p] = S.count(p) ? 1 : (member(P, p) ? 1 : 0);
        }
      },
      [](int&, const int&) {});
  return flags;
}

// adm[n] for n in [1, B]: every prime factor allowed, and for primes outside
// S the valuation divisible by m.
std::vector<char> admissible_array(std::int64_t B, int m,
                                   const std::vector<char>& flags,
                                   const std::set<std::int64_t>& S,
                                   const poly::PrimeTable& table) {
  std::vector<char> adm(static_cast<std::size_t>(B) + 1, 0);
  adm[1] = 1;
  for (std::int64_t n = 2; n <= B; ++n) {
    std::int64_t p = table.spf(static_cast<std::uint32_t>(n));
    std::int64_t rest = n;
    int v = 0;
    while (rest % p == 0) {
      rest /= p;
      ++v;
    }
    adm[n] = adm[rest] && flags[p] && (S.count(p) || v % m == 0);
  }
  return adm;
}

std::vector<std::int64_t> prefix_counts(const std::vector<char>& adm) {
  std::vector<std::int64_t> pre(adm.size(), 0);
  for (std::size_t n = 1; n < adm.size(); ++n)
    pre[n] = pre[n - 1] + (adm[n] ? 1 : 0);
  return pre;
}

// Values b * u^m <= B with b supported on S and u supported on the allowed
// primes outside S; sorted.
std::vector<std::int64_t> structured_list(std::int64_t B, int m,
                                          const std::vector<char>& flags,
                                          const std::set<std::int64_t>& S,
                                          const poly::PrimeTable& table) {
  std::int64_t U = iroot(B, m);
  std::vector<char> adm_u(static_cast<std::size_t>(U) + 1, 0);
  if (U >= 1) adm_u[1] = 1;
  for (std::int64_t u = 2; u <= U; ++u) {
    std::int64_t p = table.spf(static_cast<std::uint32_t>(u));
    adm_u[u] = adm_u[u / p] && !S.count(p) && flags[p];
  }

  // Depth-first products of S-primes up to B.
  std::vector<std::int64_t> bs;
  std::vector<std::int64_t> sp(S.begin(), S.end());
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t i,
                                                           std::int64_t b) {
    if (i == sp.size()) {
      bs.push_back(b);
      return;
    }
    for (std::int64_t val = b;; val *= sp[i]) {
      dfs(i + 1, val);
      if (val > B / sp[i]) break;
    }
  };
  dfs(0, 1);

  std::vector<std::int64_t> out;
  for (std::int64_t b : bs)
    for (std::int64_t u = 1; u <= iroot(B / b, m); ++u)
      if (adm_u[u]) out.push_back(b * ipow_checked(u, m, B));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> distinct_primes_of(std::int64_t n,
                                             const poly::PrimeTable& table) {
  std::vector<std::int64_t> ps;
  while (n > 1) {
    std::int64_t p = table.spf(static_cast<std::uint32_t>(n));
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  return ps;
}

}  // namespace

Rat c_s_exact(const std::vector<std::int64_t>& S, int alpha) {
  if (alpha < 1) throw validation_error("c_S: integer exponent must be >= 1");
  Rat prod = 1;
  for (std::int64_t p : S) {
    if (p < 2 || !poly::is_prime_u64(static_cast<std::uint64_t>(p)))
      throw validation_error("c_S: " + std::to_string(p) + " is not a prime");
    Int pa = 1;
    for (int i = 0; i < alpha; ++i) pa *= p;
    prod *= Rat(pa - 1, pa);
  }
  return prod;
}

double c_s_real(const std::vector<std::int64_t>& S, double alpha) {
  if (alpha <= 0) throw validation_error("c_S: exponent must be positive");
  double prod = 1.0;
  for (std::int64_t p : S) {
    if (p < 2 || !poly::is_prime_u64(static_cast<std::uint64_t>(p)))
      throw validation_error("c_S: " + std::to_string(p) + " is not a prime");
    prod *= 1.0 - std::pow(static_cast<double>(p), -alpha);
  }
  return prod;
}

void PairCountSpec::validate() const {
  if (m0 < 1 || m1 < 1)
    throw validation_error("pair count: multiplicities must be >= 1");
  for (std::int64_t p : S)
    if (p < 2 || !poly::is_prime_u64(static_cast<std::uint64_t>(p)))
      throw validation_error("pair count: bad prime " + std::to_string(p) +
                             " in S");
  if (density0 <= 0 || density0 > 1 || density1 <= 0 || density1 > 1)
    throw validation_error("pair count: densities must lie in (0, 1]");
}

PairCount count_frobenian_pairs(const PairCountSpec& spec, std::int64_t B,
                                const poly::PrimeTable& table) {
  spec.validate();
  if (B < 1) throw validation_error("pair count: B must be >= 1");
  if (static_cast<std::int64_t>(table.bound()) < B)
    throw resource_error("pair count: prime table smaller than B");
  double t0 = now_seconds();

  std::set<std::int64_t> S(spec.S.begin(), spec.S.end());
  std::vector<char> flags0 = side_flags(spec.P0, S, B, table);
  std::vector<char> flags1 = side_flags(spec.P1, S, B, table);

  std::int64_t positive = 0;
  if (spec.m0 == 1 && spec.m1 == 1) {
    std::vector<std::int64_t> A0 =
        prefix_counts(admissible_array(B, 1, flags0, S, table));
    std::vector<std::int64_t> A1 =
        prefix_counts(admissible_array(B, 1, flags1, S, table));
    positive = parallel_range<std::int64_t>(
        1, B + 1, 0,
        [&](std::int64_t lo, std::int64_t hi, std::int64_t& acc) {
          for (std::int64_t d = lo; d < hi; ++d) {
            int sign = 1;
            bool ok = true;
            std::int64_t n = d;
            while (n > 1) {
              std::int64_t p = table.spf(static_cast<std::uint32_t>(n));
              n /= p;
              if (n % p == 0 || !flags0[p] || !flags1[p]) {
                ok = false;
                break;
              }
              sign = -sign;
            }
            if (ok) acc += sign * A0[B / d] * A1[B / d];
          }
        },
        [](std::int64_t& a, const std::int64_t& b) { a += b; });
  } else if (spec.m0 == 1 || spec.m1 == 1) {
    bool swapped = spec.m0 > 1;  // structured side first
    const auto& flags_s = swapped ? flags0 : flags1;
    const auto& flags_d = swapped ? flags1 : flags0;
    int ms = swapped ? spec.m0 : spec.m1;
    std::vector<std::int64_t> list = structured_list(B, ms, flags_s, S, table);
    std::vector<std::int64_t> A =
        prefix_counts(admissible_array(B, 1, flags_d, S, table));
    positive = parallel_range<std::int64_t>(
        0, static_cast<std::int64_t>(list.size()), 0,
        [&](std::int64_t lo, std::int64_t hi, std::int64_t& acc) {
          for (std::int64_t i = lo; i < hi; ++i) {
            std::vector<std::int64_t> ps = distinct_primes_of(list[i], table);
            int k = static_cast<int>(ps.size());
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
              std::int64_t d = 1;
              int sign = 1;
              bool ok = true;
              for (int j = 0; j < k; ++j)
                if (mask >> j & 1) {
                  if (!flags_d[ps[j]]) {
                    ok = false;
                    break;
                  }
                  d *= ps[j];
                  sign = -sign;
                }
              if (ok && d <= B) acc += sign * A[B / d];
            }
          }
        },
        [](std::int64_t& a, const std::int64_t& b) { a += b; });
  } else {
    std::vector<std::int64_t> l0 = structured_list(B, spec.m0, flags0, S, table);
    std::vector<std::int64_t> l1 = structured_list(B, spec.m1, flags1, S, table);
    if (static_cast<double>(l0.size()) * static_cast<double>(l1.size()) > 5e8)
      throw resource_error("pair count: structured lists too large");
    positive = parallel_range<std::int64_t>(
        0, static_cast<std::int64_t>(l0.size()), 0,
        [&](std::int64_t lo, std::int64_t hi, std::int64_t& acc) {
          for (std::int64_t i = lo; i < hi; ++i)
            for (std::int64_t b : l1)
              if (std::gcd(l0[i], b) == 1) ++acc;
        },
        [](std::int64_t& a, const std::int64_t& b) { a += b; });
  }

  PairCount out;
  out.pairs = 4 * positive;
  out.axis = 4;
  out.seconds = now_seconds() - t0;
  return out;
}

std::int64_t count_mult_support(const frob::FrobenianSet& P,
                                const std::vector<std::int64_t>& S,
                                std::int64_t x, const poly::PrimeTable& table) {
  if (x < 1) throw validation_error("support count: x must be >= 1");
  if (static_cast<std::int64_t>(table.bound()) < x)
    throw resource_error("support count: prime table smaller than x");
  std::set<std::int64_t> Sset(S.begin(), S.end());
  std::vector<char> flags = side_flags(P, Sset, x, table);
  std::int64_t total = 1;  // n = 1
  std::vector<char> adm(static_cast<std::size_t>(x) + 1, 0);
  adm[1] = 1;
  for (std::int64_t n = 2; n <= x; ++n) {
    std::int64_t p = table.spf(static_cast<std::uint32_t>(n));
    adm[n] = adm[n / p] && !Sset.count(p) && flags[p];
    total += adm[n];
  }
  return total;
}

double kappa_truncated(const frob::FrobenianSet& P,
                       const std::vector<std::int64_t>& S, double dens,
                       std::int64_t cutoff, const poly::PrimeTable& table,
                       std::vector<std::int64_t>* warned) {
  if (cutoff < 2) throw validation_error("kappa: cutoff must be >= 2");
  if (static_cast<std::int64_t>(table.bound()) < cutoff)
    throw resource_error("kappa: prime table smaller than the cutoff");
  std::set<std::int64_t> Sset(S.begin(), S.end());
  if (warned)
    for (std::int64_t p : excluded_outside_s(P, Sset)) warned->push_back(p);

  double logsum = 0.0;
  for (std::int64_t p : Sset) logsum += dens * std::log1p(-1.0 / p);

  const auto& primes = table.primes();
  std::int64_t np = 0;
  while (np < static_cast<std::int64_t>(primes.size()) && primes[np] <= cutoff)
    ++np;
  logsum += parallel_range<double>(
      0, np, 0.0,
      [&](std::int64_t lo, std::int64_t hi, double& acc) {
        for (std::int64_t i = lo; i < hi; ++i) {
          std::int64_t p = primes[i];
          if (Sset.count(p)) continue;
          double e = member(P, p) ? 1.0 : 0.0;
          acc += (dens - e) * std::log1p(-1.0 / p);
        }
      },
      [](double& a, const double& b) { a += b; });
  return std::exp(logsum);
}

double mult_support_main(const frob::FrobenianSet& P,
                         const std::vector<std::int64_t>& S, double dens,
                         std::int64_t x, std::int64_t cutoff,
                         const poly::PrimeTable& table) {
  if (x < 3) throw validation_error("support main term: x must be >= 3");
  double kappa = kappa_truncated(P, S, dens, cutoff, table, nullptr);
  double lx = std::log(static_cast<double>(x));
  return kappa * static_cast<double>(x) * std::pow(lx, dens - 1.0) /
         std::tgamma(dens);
}

ConstantResult asymptotic_constant(const PairCountSpec& spec, std::int64_t cutoff,
                                   const poly::PrimeTable& table) {
  spec.validate();
  if (cutoff < 4) throw validation_error("constant: cutoff must be >= 4");
  if (static_cast<std::int64_t>(table.bound()) < cutoff)
    throw resource_error("constant: prime table smaller than the cutoff");

  std::set<std::int64_t> S(spec.S.begin(), spec.S.end());
  double d0 = to_double(spec.density0);
  double d1 = to_double(spec.density1);

  ConstantResult out;
  out.cutoff = cutoff;
  for (std::int64_t p : excluded_outside_s(spec.P0, S)) out.warned.push_back(p);
  for (std::int64_t p : excluded_outside_s(spec.P1, S)) out.warned.push_back(p);
  std::sort(out.warned.begin(), out.warned.end());
  out.warned.erase(std::unique(out.warned.begin(), out.warned.end()),
                   out.warned.end());

  double pref = 4.0 * std::pow(spec.m0, 1.0 - d0) * std::pow(spec.m1, 1.0 - d1) /
                (std::tgamma(d0) * std::tgamma(d1));
  std::vector<std::int64_t> Sv(S.begin(), S.end());
  double cs = c_s_real(Sv, 1.0 / spec.m0 + 1.0 / spec.m1) /
              (c_s_real(Sv, 1.0 / spec.m0) * c_s_real(Sv, 1.0 / spec.m1));
  double slog = 0.0;
  for (std::int64_t p : Sv) slog += (d0 + d1) * std::log1p(-1.0 / p);

  const auto& primes = table.primes();
  std::int64_t np = 0;
  while (np < static_cast<std::int64_t>(primes.size()) && primes[np] <= cutoff)
    ++np;
  struct Logs {
    double full = 0.0, half = 0.0;
  };
  Logs logs = parallel_range<Logs>(
      0, np, Logs{},
      [&](std::int64_t lo, std::int64_t hi, Logs& acc) {
        for (std::int64_t i = lo; i < hi; ++i) {
          std::int64_t p = primes[i];
          if (S.count(p)) continue;
          double e0 = member(spec.P0, p) ? 1.0 : 0.0;
          double e1 = member(spec.P1, p) ? 1.0 : 0.0;
          double dp = static_cast<double>(p);
          double t = (d0 - e0 + d1 - e1) * std::log1p(-1.0 / dp) +
                     e0 * e1 * std::log1p(-1.0 / (dp * dp));
          acc.full += t;
          if (2 * p <= cutoff) acc.half += t;
        }
      },
      [](Logs& a, const Logs& b) {
        a.full += b.full;
        a.half += b.half;
      });

  out.value = pref * cs * std::exp(slog + logs.full);
  out.value_half = pref * cs * std::exp(slog + logs.half);
  return out;
}

double pair_count_main(const PairCountSpec& spec, double constant, double B) {
  if (B < 3) throw validation_error("main term: B must be >= 3");
  double d0 = to_double(spec.density0);
  double d1 = to_double(spec.density1);
  double expo = 1.0 / spec.m0 + 1.0 / spec.m1;
  return constant * std::pow(B, expo) /
         std::pow(std::log(B), 2.0 - d0 - d1);
}

namespace {

struct FibreTest {
  const orb::ClosedPointFibre* fibre = nullptr;
  int min_mult = 1;
  bool trivial_field = true;  // min_mult_field of degree 1
  // fixed[i]: frobenius bit for the i-th prime of the table (coordinate
  // fibres precompute; middle fibres fill lazily per worker).
};

// Mode verdict for one prime of valuation v against one fibre, with the
// frobenius bit(s) supplied by the caller.
bool mode_ok(sol::Mode mode, const orb::ClosedPointFibre& fibre, int m,
             bool fixed_min, int v) {
  switch (mode) {
    case sol::Mode::sufficient:
      return fixed_min && v % m == 0;
    case sol::Mode::necessary:
      return !(v < m || (v == m && !fixed_min));
    case sol::Mode::clique:
      break;
  }
  throw validation_error("clique verdicts need per-component bits");
}

}  // namespace

NlocResult count_nloc_example(const orb::FibrationDescriptor& desc,
                              std::int64_t B, sol::Mode mode,
                              const poly::PrimeTable& table) {
  if (B < 2) throw validation_error("local count: B must be >= 2");
  if (static_cast<std::int64_t>(table.bound()) < B)
    throw resource_error("local count: prime table smaller than B");
  double t0 = now_seconds();

  const orb::ClosedPointFibre* fz = desc.fibre_at_zero();
  const orb::ClosedPointFibre* fi = desc.fibre_at_infinity();
  std::vector<const orb::ClosedPointFibre*> middles;
  for (const orb::ClosedPointFibre& f : desc.points)
    if (&f != fz && &f != fi) middles.push_back(&f);

  double table_cap = static_cast<double>(table.bound()) *
                     static_cast<double>(table.bound());
  for (const orb::ClosedPointFibre* f : middles) {
    double max_h = 0.0;
    for (int k = 0; k <= f->form.degree(); ++k)
      max_h += std::abs(to_double(Rat(f->form.coeffs()[k]))) *
               std::pow(static_cast<double>(B), f->form.degree());
    if (max_h >= table_cap)
      throw resource_error("local count: prime table too small for the fibre "
                           "values at this height");
  }

  const std::set<std::int64_t>& S = desc.bad_primes;

  // Per-prime frobenius bits for a fibre's minimal field (or per component
  // in clique mode), indexed like table.primes().
  const auto& primes = table.primes();
  std::int64_t np = 0;
  while (np < static_cast<std::int64_t>(primes.size()) && primes[np] <= B) ++np;
  std::unordered_map<std::int64_t, std::int64_t> prime_index;
  for (std::int64_t i = 0; i < np; ++i) prime_index[primes[i]] = i;

  auto fixed_bits_for = [&](const poly::IntPoly& field) {
    std::vector<char> bits(static_cast<std::size_t>(np), 1);
    if (field.degree() >= 2) {
      parallel_range<int>(
          0, np, 0,
          [&](std::int64_t lo, std::int64_t hi, int&) {
            for (std::int64_t i = lo; i < hi; ++i) {
              std::int64_t p = primes[i];
              bits[i] = S.count(p) ? 1 : (frob::fixes_component(field, p) ? 1 : 0);
            }
          },
          [](int&, const int&) {});
    }
    return bits;
  };

  // The verdict for a coordinate fibre at prime index pi and valuation v.
  struct CoordData {
    const orb::ClosedPointFibre* fibre = nullptr;
    std::vector<char> fixed_min;
    std::vector<std::vector<char>> comp_bits;  // clique mode
  };
  auto build_coord = [&](const orb::ClosedPointFibre* f) {
    CoordData cd;
    cd.fibre = f;
    if (!f || f->split) return cd;
    if (mode == sol::Mode::clique) {
      for (const orb::Component& c : f->components)
        cd.comp_bits.push_back(fixed_bits_for(c.field_poly));
    } else {
      cd.fixed_min = fixed_bits_for(f->min_mult_field);
    }
    return cd;
  };
  CoordData cz = build_coord(fz);
  CoordData ci = build_coord(fi);

  auto coord_ok = [&](const CoordData& cd, std::int64_t pi, int v) {
    const orb::ClosedPointFibre* f = cd.fibre;
    if (!f || f->split) return true;
    if (mode == sol::Mode::clique) {
      std::vector<char> bits(f->components.size());
      for (std::size_t c = 0; c < bits.size(); ++c) bits[c] = cd.comp_bits[c][pi];
      return sol::clique_soluble(*f, v, bits);
    }
    return mode_ok(mode, *f, f->min_multiplicity(),
                   cd.fixed_min.empty() ? true : cd.fixed_min[pi] != 0, v);
  };

  // Admissible coordinate values in [1, B].
  auto coord_admissible = [&](const CoordData& cd) {
    std::vector<char> adm(static_cast<std::size_t>(B) + 1, 1);
    adm[0] = 0;
    parallel_range<int>(
        1, B + 1, 0,
        [&](std::int64_t lo, std::int64_t hi, int&) {
          for (std::int64_t n = lo; n < hi; ++n) {
            std::int64_t rest = n;
            bool ok = true;
            while (rest > 1 && ok) {
              std::int64_t p = table.spf(static_cast<std::uint32_t>(rest));
              int v = 0;
              while (rest % p == 0) {
                rest /= p;
                ++v;
              }
              if (!S.count(p)) ok = coord_ok(cd, prime_index.at(p), v);
            }
            adm[n] = ok;
          }
        },
        [](int&, const int&) {});
    return adm;
  };
  std::vector<char> admA = coord_admissible(cz);
  std::vector<char> admB = coord_admissible(ci);

  std::vector<std::int64_t> avals;
  for (std::int64_t a = 1; a <= B; ++a)
    if (admA[a]) avals.push_back(a);

  NlocResult out;

  // The two coordinate points.
  auto test_special = [&](const Int& a, const Int& b,
                          const orb::ClosedPointFibre* on) {
    if (on) {
      ++out.on_divisor;
      return;
    }
    sol::RationalPoint pt = sol::RationalPoint::make(a, b);
    if (sol::soluble_away_from_s(desc, pt, mode, table).overall) ++out.points;
  };
  test_special(1, 0, fi);
  test_special(0, 1, fz);

  // Middle fibres that actually impose conditions.
  std::vector<const orb::ClosedPointFibre*> active;
  for (const orb::ClosedPointFibre* f : middles)
    if (!f->split) active.push_back(f);

  if (middles.empty()) {
    // No middle fibres at all: count pairs by inclusion-exclusion over b.
    std::vector<std::int64_t> cb(static_cast<std::size_t>(B) + 1, 0);
    parallel_range<int>(
        1, B + 1, 0,
        [&](std::int64_t lo, std::int64_t hi, int&) {
          for (std::int64_t d = lo; d < hi; ++d)
            for (std::int64_t k = d; k <= B; k += d) cb[d] += admB[k];
        },
        [](int&, const int&) {});
    out.points += 2 * parallel_range<std::int64_t>(
        0, static_cast<std::int64_t>(avals.size()), 0,
        [&](std::int64_t lo, std::int64_t hi, std::int64_t& acc) {
          for (std::int64_t i = lo; i < hi; ++i) {
            std::vector<std::int64_t> ps = distinct_primes_of(avals[i], table);
            int k = static_cast<int>(ps.size());
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
              std::int64_t d = 1;
              int sign = 1;
              for (int j = 0; j < k; ++j)
                if (mask >> j & 1) {
                  d *= ps[j];
                  sign = -sign;
                }
              acc += sign * cb[d];
            }
          }
        },
        [](std::int64_t& a, const std::int64_t& b) { a += b; });
  } else {
    std::vector<std::int64_t> bvals;
    for (std::int64_t b = 1; b <= B; ++b)
      if (admB[b]) bvals.push_back(b);

    struct Acc {
      std::int64_t points = 0, on_divisor = 0;
    };
    Acc acc = parallel_range<Acc>(
        0, static_cast<std::int64_t>(avals.size()), Acc{},
        [&](std::int64_t lo, std::int64_t hi, Acc& a) {
          // Per-worker frobenius caches for the middle fibres, keyed by
          // (fibre index << 32) | prime or (component) likewise.
          std::unordered_map<std::int64_t, char> fix_cache;
          auto middle_fixed = [&](std::size_t mi, const poly::IntPoly& field,
                                  std::int64_t p) -> bool {
            if (field.degree() < 2) return true;
            std::int64_t key =
                static_cast<std::int64_t>(mi) << 40 | p;
            auto it = fix_cache.find(key);
            if (it != fix_cache.end()) return it->second != 0;
            bool v = frob::fixes_component(field, p);
            fix_cache.emplace(key, v ? 1 : 0);
            return v;
          };
          auto middle_ok = [&](std::size_t mi, const orb::ClosedPointFibre& f,
                               std::int64_t p, int v) -> bool {
            if (mode == sol::Mode::clique) {
              std::vector<char> bits(f.components.size());
              for (std::size_t c = 0; c < bits.size(); ++c)
                bits[c] = middle_fixed(mi * 64 + c + 1, f.components[c].field_poly, p);
              return sol::clique_soluble(f, v, bits);
            }
            return mode_ok(mode, f, f.min_multiplicity(),
                           middle_fixed(mi * 64, f.min_mult_field, p), v);
          };

          for (std::int64_t i = lo; i < hi; ++i) {
            std::int64_t av = avals[i];
            for (std::int64_t bv : bvals) {
              if (std::gcd(av, bv) != 1) continue;
              for (int sign : {+1, -1}) {
                std::int64_t b = sign * bv;
                bool ok = true;
                bool on_div = false;
                for (std::size_t mi = 0; mi < middles.size() && ok; ++mi) {
                  const orb::ClosedPointFibre& f = *middles[mi];
                  std::int64_t h = f.form.evaluate_i64(av, b);
                  if (h == 0) {
                    on_div = true;
                    break;
                  }
                  if (f.split) continue;
                  if (h < 0) h = -h;
                  auto fac = poly::factorize_i64(h, table);
                  for (const auto& [p, v] : fac.factors) {
                    if (S.count(p)) continue;
                    if (!middle_ok(mi, f, p, v)) {
                      ok = false;
                      break;
                    }
                  }
                }
                if (on_div)
                  ++a.on_divisor;
                else if (ok)
                  ++a.points;
              }
            }
          }
        },
        [](Acc& a, const Acc& b) {
          a.points += b.points;
          a.on_divisor += b.on_divisor;
        });
    out.points += acc.points;
    out.on_divisor += acc.on_divisor;
  }

  out.seconds = now_seconds() - t0;
  return out;
}

std::int64_t count_beta_sieve_pairs(const poly::IntPoly& K, std::int64_t X,
                                    const poly::PrimeTable& table) {
  if (X < 2) throw validation_error("sieve count: X must be >= 2");
  if (static_cast<double>(X) * static_cast<double>(X) >
      static_cast<double>(table.bound()))
    throw resource_error("sieve count: need a prime table of size X^2");
  if (K.degree() < 2) throw validation_error("sieve count: field degree >= 2");

  std::set<std::int64_t> ram;
  for (std::int64_t p : frob::ramified_primes(K)) ram.insert(p);
  int deg = K.degree();

  return parallel_range<std::int64_t>(
      0, X + 1, 0,
      [&](std::int64_t lo, std::int64_t hi, std::int64_t& acc) {
        std::unordered_map<std::int64_t, char> split_cache;
        auto splits = [&](std::int64_t p) -> bool {
          if (ram.count(p)) return false;
          auto it = split_cache.find(p);
          if (it != split_cache.end()) return it->second != 0;
          bool s = poly::count_roots_mod_p(K, p) == deg;
          split_cache.emplace(p, s ? 1 : 0);
          return s;
        };
        for (std::int64_t v = lo; v < hi; ++v) {
          for (std::int64_t u = 0;; ++u) {
            std::int64_t u6 = ipow_checked(u, 6, X * X);
            std::int64_t w = u6 + v * v;
            if (u6 > X * X || w > X * X) break;
            if (w == 0) continue;
            if (std::gcd(u, v) != 1) continue;
            bool ok = true;
            std::int64_t n = w;
            while (n > 1 && ok) {
              std::int64_t p = table.spf(static_cast<std::uint32_t>(n));
              if (!splits(p)) ok = false;
              while (n % p == 0) n /= p;
            }
            if (ok) ++acc;
          }
        }
      },
      [](std::int64_t& a, const std::int64_t& b) { a += b; });
}

}  // namespace orbistat::count
