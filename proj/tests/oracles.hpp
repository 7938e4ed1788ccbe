#pragma once

// Brute-force reference implementations the test suite pins the library
// against.  Everything here trades speed for obviousness: closures by
// breadth-first search, trial division, residue scans, exhaustive loops.
// Library types appear only as input carriers; no counting or density
// routine from the library is called.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "orbistat/counting.hpp"
#include "orbistat/fibration.hpp"
#include "orbistat/frobenian.hpp"

namespace oracle {

using i64 = std::int64_t;
using Perm = std::vector<int>;

inline Perm pmul(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline std::vector<Perm> close_perms(int degree, std::vector<Perm> gens) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  while (!queue.empty()) {
    Perm a = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm b = pmul(a, g);
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  return {seen.begin(), seen.end()};
}

struct NamedGroup {
  std::string name;
  int degree;
  std::vector<Perm> gens;
};

// s3 and s4 in their natural actions, d4 on the square's vertices, c6
// regular, q8 regular on 1, -1, i, -i, j, -j, k, -k (in that index order).
inline std::vector<NamedGroup> group_corpus() {
  return {
      {"s3", 3, {{1, 0, 2}, {1, 2, 0}}},
      {"s4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}},
      {"d4", 4, {{1, 2, 3, 0}, {2, 1, 0, 3}}},
      {"c6", 6, {{1, 2, 3, 4, 5, 0}}},
      {"q8", 8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}},
  };
}

// Every subgroup, found by closing each extension of each known subgroup by
// one further element.  Subgroups come out as sorted element lists.
inline std::vector<std::vector<Perm>> all_subgroups(const std::vector<Perm>& G) {
  int degree = static_cast<int>(G.front().size());
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<Perm>> found{{id}};
  std::vector<std::vector<Perm>> queue{{id}};
  while (!queue.empty()) {
    std::vector<Perm> H = queue.back();
    queue.pop_back();
    for (const Perm& g : G) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      std::vector<Perm> gens = H;
      gens.push_back(g);
      std::vector<Perm> K = close_perms(degree, gens);
      if (found.insert(K).second) queue.push_back(K);
    }
  }
  return {found.begin(), found.end()};
}

inline Perm pinv(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

// delta = 1 - #(T cap H1) / #H1 with T the union of the conjugates of H2,
// as a reduced fraction.
inline std::pair<i64, i64> delta_brute(const std::vector<Perm>& G,
                                       const std::vector<Perm>& H1,
                                       const std::vector<Perm>& H2) {
  std::set<Perm> T;
  for (const Perm& g : G) {
    Perm gi = pinv(g);
    for (const Perm& h : H2) T.insert(pmul(pmul(g, h), gi));
  }
  i64 hit = 0;
  for (const Perm& h : H1) hit += T.count(h) ? 1 : 0;
  i64 num = static_cast<i64>(H1.size()) - hit;
  i64 den = static_cast<i64>(H1.size());
  i64 d = std::gcd(num, den);
  return {num / d, den / d};
}

// Distinct roots of f mod p by scanning every residue.
inline int roots_mod_p(const std::vector<i64>& f, i64 p) {
  int count = 0;
  for (i64 t = 0; t < p; ++t) {
    i64 v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * t + *it % p + p) % p;
    if (v == 0) ++count;
  }
  return count;
}

inline std::vector<i64> to_i64_coeffs(const orbistat::poly::IntPoly& f) {
  std::vector<i64> c;
  for (const orbistat::Int& v : f.coeffs()) c.push_back(v.convert_to<i64>());
  return c;
}

inline std::vector<std::pair<i64, int>> trial_factor(i64 n) {
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      out.push_back({p, e});
    }
  if (n > 1) out.push_back({n, 1});
  return out;
}

// Membership of a prime in a frobenian set, recomputed from the set's
// description with scan-based root counting.  Excluded primes are reported
// as non-members, matching the counting convention.
inline bool member_brute(const orbistat::frob::FrobenianSet& P, i64 p) {
  using Kind = orbistat::frob::FrobenianSet::Kind;
  if (P.is_excluded(p)) return false;
  switch (P.kind()) {
    case Kind::all:
      return true;
    case Kind::has_root:
      return roots_mod_p(to_i64_coeffs(P.polynomial()), p) >= 1;
    case Kind::root_count:
      return roots_mod_p(to_i64_coeffs(P.polynomial()), p) == P.target_count();
    case Kind::splits_completely:
      return roots_mod_p(to_i64_coeffs(P.polynomial()), p) ==
             P.polynomial().degree();
    case Kind::intersection:
      for (const auto& c : P.children())
        if (!member_brute(c, p)) return false;
      return true;
    case Kind::complement:
      return !member_brute(P.children().front(), p);
  }
  return false;
}

// n >= 1 admissible when every prime factor outside S is a member and
// divides n to an order the multiplicity divides.
inline bool blind_admissible(i64 n, int m, const std::function<bool(i64)>& in_p,
                             const std::set<i64>& S) {
  for (auto [p, e] : trial_factor(n)) {
    if (S.count(p)) continue;
    if (!in_p(p)) return false;
    if (e % m != 0) return false;
  }
  return true;
}

// Ordered pairs (a0, a1), both nonzero, |ai| <= B, gcd = 1, each side
// admissible: four sign choices times a double loop over positive values.
inline i64 blind_pair_count(i64 B, int m0, int m1,
                            const std::function<bool(i64)>& in_p0,
                            const std::function<bool(i64)>& in_p1,
                            const std::set<i64>& S) {
  std::vector<i64> a0, a1;
  for (i64 n = 1; n <= B; ++n) {
    if (blind_admissible(n, m0, in_p0, S)) a0.push_back(n);
    if (blind_admissible(n, m1, in_p1, S)) a1.push_back(n);
  }
  i64 positive = 0;
  for (i64 a : a0)
    for (i64 b : a1)
      if (std::gcd(a, b) == 1) ++positive;
  return 4 * positive;
}

struct PairCase {
  std::string name;
  orbistat::count::PairCountSpec spec;
};

// The parameter sets the counting tests run: one per algorithm path, the
// two headline configurations, and mirrors that probe the side symmetry.
inline std::vector<PairCase> pair_corpus() {
  using orbistat::count::PairCountSpec;
  using orbistat::frob::FrobenianSet;
  using orbistat::poly::IntPoly;
  IntPoly gauss = IntPoly::from_i64({1, 0, 1});
  IntPoly cyc = IntPoly::from_i64({-1, -3, 0, 1});

  std::vector<PairCase> out;
  auto add = [&](std::string name, PairCountSpec s) {
    out.push_back({std::move(name), std::move(s)});
  };

  PairCountSpec base;
  add("baseline", base);

  PairCountSpec flag;
  flag.m0 = 2;
  flag.P0 = FrobenianSet::has_root(gauss);
  flag.S = {2};
  flag.density0 = orbistat::Rat(1, 2);
  add("flagship", flag);

  PairCountSpec mirror;
  mirror.m1 = 2;
  mirror.P1 = FrobenianSet::has_root(gauss);
  mirror.S = {2};
  mirror.density1 = orbistat::Rat(1, 2);
  add("flagship-mirror", mirror);

  PairCountSpec dbl;
  dbl.m0 = 2;
  add("double-fibre-model", dbl);

  PairCountSpec conj;
  conj.m0 = 2;
  conj.P0 = FrobenianSet::has_root(cyc);
  conj.S = {3};
  conj.density0 = orbistat::Rat(1, 3);
  add("conjugate-lines-model", conj);

  PairCountSpec triple;
  triple.m0 = 3;
  add("triple-fibre-model", triple);

  PairCountSpec both;
  both.m0 = 2;
  both.m1 = 2;
  both.P0 = FrobenianSet::has_root(gauss);
  both.P1 = FrobenianSet::has_root(gauss);
  both.S = {2};
  both.density0 = orbistat::Rat(1, 2);
  both.density1 = orbistat::Rat(1, 2);
  add("both-sides", both);

  PairCountSpec split1;
  split1.P0 = FrobenianSet::splits_completely(cyc);
  split1.S = {3};
  split1.density0 = orbistat::Rat(1, 3);
  add("split-support", split1);

  return out;
}

inline i64 blind_pair_count(const orbistat::count::PairCountSpec& spec, i64 B) {
  std::set<i64> S(spec.S.begin(), spec.S.end());
  auto in0 = [&](i64 p) { return member_brute(spec.P0, p); };
  auto in1 = [&](i64 p) { return member_brute(spec.P1, p); };
  return blind_pair_count(B, spec.m0, spec.m1, in0, in1, S);
}

// #{1 <= n <= x : every prime factor of n lies in P and outside S}.
inline i64 mult_support_brute(const orbistat::frob::FrobenianSet& P,
                              const std::set<i64>& S, i64 x) {
  i64 total = 0;
  for (i64 n = 1; n <= x; ++n) {
    bool ok = true;
    for (auto [p, e] : trial_factor(n))
      if (S.count(p) || !member_brute(P, p)) {
        ok = false;
        break;
      }
    if (ok) ++total;
  }
  return total;
}

// Whether n is a sum of the multiplicities with every coefficient >= 1.
inline bool span_brute(i64 n, const std::vector<int>& mults) {
  if (mults.empty()) return false;
  std::function<bool(std::size_t, i64)> rec = [&](std::size_t i, i64 rest) {
    if (i == mults.size()) return rest == 0;
    for (i64 k = 1; k * mults[i] <= rest; ++k)
      if (rec(i + 1, rest - k * mults[i])) return true;
    return false;
  };
  return rec(0, n);
}

inline i64 powmod(i64 b, i64 e, i64 m) {
  i64 r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return r;
}

// nu(p) by the defining double scan over F_p^2.
inline i64 nu_brute(i64 p, const orbistat::poly::BinaryForm& h, int e0, int e1,
                    i64 v0, i64 v1) {
  int n = h.degree();
  std::vector<i64> c;
  for (const orbistat::Int& v : h.coeffs()) {
    orbistat::Int r = v % p;
    if (r < 0) r += p;
    c.push_back(r.convert_to<i64>());
  }
  i64 total = 0;
  for (i64 t0 = 0; t0 < p; ++t0)
    for (i64 t1 = 0; t1 < p; ++t1) {
      i64 a0 = v0 % p * powmod(t0, e0, p) % p;
      i64 a1 = v1 % p * powmod(t1, e1, p) % p;
      i64 g = 0;
      for (int k = 0; k <= n; ++k)
        g = (g + c[k] * powmod(a0, k, p) % p * powmod(a1, n - k, p)) % p;
      if ((g % p + p) % p == 0) ++total;
    }
  return total;
}

// The ruled-out proportion of (t0, t1) mod p^2, by the defining scan: an
// event at a coordinate fibre needs the exact valuation 1 on that
// coordinate, a middle event needs the specialized form to vanish mod p but
// not mod p^2; events only fire where the fibre is non-split and frobenius
// moves every minimal component.
inline double omega_bar_brute(const orbistat::orb::FibrationDescriptor& desc,
                              i64 p, i64 v0, i64 v1) {
  const auto* fz = desc.fibre_at_zero();
  const auto* fi = desc.fibre_at_infinity();
  auto min_mult = [](const orbistat::orb::ClosedPointFibre& f) {
    int m = 0;
    for (const auto& c : f.components) m = m == 0 ? c.multiplicity : std::min(m, c.multiplicity);
    return m == 0 ? 1 : m;
  };
  auto active = [&](const orbistat::orb::ClosedPointFibre* f) {
    if (!f || f->split) return false;
    return roots_mod_p(to_i64_coeffs(f->min_mult_field), p) == 0;
  };
  int m0 = fz ? min_mult(*fz) : 1;
  int m1 = fi ? min_mult(*fi) : 1;
  i64 p2 = p * p;

  std::vector<const orbistat::orb::ClosedPointFibre*> middles;
  for (const auto& f : desc.points)
    if (&f != fz && &f != fi && active(&f)) middles.push_back(&f);
  bool ez = active(fz), ei = active(fi);

  i64 hits = 0;
  for (i64 t0 = 0; t0 < p2; ++t0)
    for (i64 t1 = 0; t1 < p2; ++t1) {
      bool in = false;
      if (ez && t0 % p == 0 && t0 % p2 != 0) in = true;
      if (!in && ei && t1 % p == 0 && t1 % p2 != 0) in = true;
      if (!in)
        for (const auto* f : middles) {
          i64 a0 = (v0 % p2 + p2) % p2 * powmod(t0, m0, p2) % p2;
          i64 a1 = (v1 % p2 + p2) % p2 * powmod(t1, m1, p2) % p2;
          int n = f->form.degree();
          i64 g = 0;
          for (int k = 0; k <= n; ++k) {
            orbistat::Int r = f->form.coeff(k) % p2;
            if (r < 0) r += p2;
            g = (g + r.convert_to<i64>() * powmod(a0, k, p2) % p2 *
                         powmod(a1, n - k, p2)) %
                p2;
          }
          if (g % p == 0 && g != 0) {
            in = true;
            break;
          }
        }
      if (in) ++hits;
    }
  return static_cast<double>(hits) /
         (static_cast<double>(p2) * static_cast<double>(p2));
}

// #{u, v >= 0 coprime, 0 < u^6 + v^2 <= X^2, every prime factor of the sum
// a full splitter of K}, with splitting decided by residue scan.
inline i64 beta_brute(const std::vector<i64>& K, i64 X) {
  int deg = static_cast<int>(K.size()) - 1;
  auto splits = [&](i64 p) { return roots_mod_p(K, p) == deg; };
  i64 total = 0;
  for (i64 u = 0;; ++u) {
    i64 u6 = u * u * u;
    u6 = u6 * u6;
    if (u6 > X * X) break;
    for (i64 v = 0; u6 + v * v <= X * X; ++v) {
      if (u6 + v * v == 0 || std::gcd(u, v) != 1) continue;
      bool ok = true;
      for (auto [p, e] : trial_factor(u6 + v * v))
        if (!splits(p)) {
          ok = false;
          break;
        }
      if (ok) ++total;
    }
  }
  return total;
}

// Primitive points of P^1(Q) of height <= B: x0 > 0 with any coprime x1,
// plus the point (0 : 1).
inline i64 p1_points(i64 B) {
  i64 total = 1;
  for (i64 a = 1; a <= B; ++a)
    for (i64 b = -B; b <= B; ++b)
      if (std::gcd(a, b < 0 ? -b : b) == 1) ++total;
  return total;
}

// The three fibre conditions of the t3 model at a primitive point, checked
// by trial division: x0 and x1 square away from 2, every odd prime of
// x0 - x1 congruent to 1 mod 4.
inline bool t3_accept_brute(i64 x0, i64 x1) {
  auto even_valuations = [](i64 n) {
    for (auto [p, e] : trial_factor(n < 0 ? -n : n))
      if (p != 2 && e % 2 != 0) return false;
    return true;
  };
  if (x0 == 0 || x1 == 0 || x0 == x1) return false;  // on a marked fibre
  if (!even_valuations(x0) || !even_valuations(x1)) return false;
  i64 d = x0 - x1;
  for (auto [p, e] : trial_factor(d < 0 ? -d : d))
    if (p != 2 && p % 4 != 1) return false;
  return true;
}

inline std::vector<i64> squarefree_list(i64 count) {
  std::vector<i64> out;
  for (i64 n = 1; static_cast<i64>(out.size()) < count; ++n) {
    bool sf = true;
    for (i64 d = 2; d * d <= n; ++d)
      if (n % (d * d) == 0) {
        sf = false;
        break;
      }
    if (sf) {
      out.push_back(n);
      if (static_cast<i64>(out.size()) < count) out.push_back(-n);
    }
  }
  return out;
}

}  // namespace oracle
