#include "orbistat/poly_factor.hpp"

#include <algorithm>

#include "orbistat/errors.hpp"
#include "orbistat/modpoly.hpp"
#include "orbistat/prime_table.hpp"

namespace orbistat::poly {

IntPoly PolyFactorization::product() const {
  IntPoly r = poly_const(content);
  for (const auto& [f, e] : factors)
    for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw validation_error("squarefree decomposition of zero");
  IntPoly g = f.primitive_part();
  std::vector<std::pair<IntPoly, int>> out;
  if (g.degree() < 1) return out;
  // Yun's algorithm, kept integral via primitive parts and Gauss's lemma.
  IntPoly u = poly_gcd(g, g.derivative());
  IntPoly v = g.divide_exact(u);
  IntPoly w = g.derivative().divide_exact(u);
  int i = 1;
  while (v.degree() > 0) {
    IntPoly z = w - v.derivative();
    IntPoly h = poly_gcd(v, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    if (h.degree() == 0) h = poly_const(1);
    v = v.divide_exact(h);
    w = z.divide_exact(h);
    ++i;
  }
  return out;
}

namespace {

// Polynomials over Z/m, cpp_int coefficients, constant-first, trimmed.
using PM = std::vector<Int>;

Int smod(Int a, const Int& m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

void pm_trim(PM& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PM pm_from_intpoly(const IntPoly& f, const Int& m) {
  PM r;
  r.reserve(f.coeffs().size());
  for (const Int& v : f.coeffs()) r.push_back(smod(v, m));
  pm_trim(r);
  return r;
}

PM pm_mod(const PM& a, const Int& m) {
  PM r;
  r.reserve(a.size());
  for (const Int& v : a) r.push_back(smod(v, m));
  pm_trim(r);
  return r;
}

PM pm_mul(const PM& a, const PM& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  PM r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (Int& v : r) v = smod(v, m);
  pm_trim(r);
  return r;
}

PM pm_add(const PM& a, const PM& b, const Int& m) {
  PM r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  for (Int& v : r) v = smod(v, m);
  pm_trim(r);
  return r;
}

PM pm_sub(const PM& a, const PM& b, const Int& m) {
  PM r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  for (Int& v : r) v = smod(v, m);
  pm_trim(r);
  return r;
}

// Division by a monic divisor; returns (quotient, remainder).
std::pair<PM, PM> pm_divmod_monic(const PM& a, const PM& d, const Int& m) {
  PM r = a;
  PM q;
  int dd = static_cast<int>(d.size()) - 1;
  if (static_cast<int>(r.size()) - 1 >= dd && dd >= 0)
    q.assign(r.size() - d.size() + 1, Int(0));
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= dd) {
    int k = static_cast<int>(r.size()) - 1 - dd;
    Int t = r.back();
    q[k] = smod(q[k] + t, m);
    for (int j = 0; j <= dd; ++j) r[k + j] = smod(r[k + j] - t * d[j], m);
    pm_trim(r);
  }
  pm_trim(q);
  return {q, r};
}

Int int_inverse_mod(const Int& a, const Int& m) {
  Int old_r = smod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int qt = old_r / r;
    Int tmp = old_r - qt * r;
    old_r = r;
    r = tmp;
    tmp = old_s - qt * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw resource_error("int_inverse_mod: not invertible");
  return smod(old_s, m);
}

// Extended Euclid over F_p: s*g + t*h = 1 for coprime g, h.
void pm_bezout_mod_p(const PM& g, const PM& h, const Int& p, PM& s, PM& t) {
  PM r0 = g, r1 = h;
  PM s0 = {Int(1)}, s1 = {};
  PM t0 = {}, t1 = {Int(1)};
  while (!r1.empty()) {
    PM q;
    PM rem = r0;
    Int inv_lc = int_inverse_mod(r1.back(), p);
    int d1 = static_cast<int>(r1.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 >= d1)
      q.assign(rem.size() - r1.size() + 1, Int(0));
    while (!rem.empty() && static_cast<int>(rem.size()) - 1 >= d1) {
      int k = static_cast<int>(rem.size()) - 1 - d1;
      Int f = smod(rem.back() * inv_lc, p);
      q[k] = smod(q[k] + f, p);
      for (int j = 0; j <= d1; ++j) rem[k + j] = smod(rem[k + j] - f * r1[j], p);
      pm_trim(rem);
    }
    pm_trim(q);
    PM ns = pm_sub(s0, pm_mul(q, s1, p), p);
    PM nt = pm_sub(t0, pm_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.size() != 1) throw resource_error("hensel: modular factors not coprime");
  Int inv = int_inverse_mod(r0[0], p);
  s = std::move(s0);
  t = std::move(t0);
  for (Int& v : s) v = smod(v * inv, p);
  for (Int& v : t) v = smod(v * inv, p);
}

// One quadratic Hensel step: from f = g*h (mod m) and s*g + t*h = 1 (mod m)
// to the same statements mod m^2; h stays monic.
void hensel_step(const IntPoly& f, PM& g, PM& h, PM& s, PM& t, const Int& m) {
  Int m2 = m * m;
  PM fm = pm_from_intpoly(f, m2);
  PM e = pm_sub(fm, pm_mul(g, h, m2), m2);
  auto [q, r] = pm_divmod_monic(pm_mul(s, e, m2), h, m2);
  PM gstar = pm_add(g, pm_add(pm_mul(t, e, m2), pm_mul(q, g, m2), m2), m2);
  PM hstar = pm_add(h, r, m2);
  PM b = pm_sub(pm_add(pm_mul(s, gstar, m2), pm_mul(t, hstar, m2), m2),
                PM{Int(1)}, m2);
  auto [c, d] = pm_divmod_monic(pm_mul(s, b, m2), hstar, m2);
  PM sstar = pm_sub(s, d, m2);
  PM tstar = pm_sub(t, pm_add(pm_mul(t, b, m2), pm_mul(c, gstar, m2), m2), m2);
  g = std::move(gstar);
  h = std::move(hstar);
  s = std::move(sstar);
  t = std::move(tstar);
}

// Lifts the mod-p factor list of f (monic) to modulus p^(2^K) = target_mod.
// f is known mod target_mod (it is an integer polynomial); returns monic
// factors mod target_mod, in the order of factors_p.
std::vector<PM> lift_tree(const IntPoly& f, const std::vector<PM>& factors_p,
                          const Int& p, const Int& target_mod) {
  if (factors_p.size() == 1) return {pm_from_intpoly(f, target_mod)};
  std::size_t half = factors_p.size() / 2;
  std::vector<PM> L(factors_p.begin(), factors_p.begin() + half);
  std::vector<PM> R(factors_p.begin() + half, factors_p.end());
  PM g = {Int(1)}, h = {Int(1)};
  for (const PM& a : L) g = pm_mul(g, a, p);
  for (const PM& a : R) h = pm_mul(h, a, p);
  PM s, t;
  pm_bezout_mod_p(g, h, p, s, t);
  Int m = p;
  while (m < target_mod) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  // Recurse with the lifted halves as the new targets.
  IntPoly gpoly{std::vector<Int>(g.begin(), g.end())};
  IntPoly hpoly{std::vector<Int>(h.begin(), h.end())};
  std::vector<PM> out = lift_tree(gpoly, L, p, target_mod);
  std::vector<PM> right = lift_tree(hpoly, R, p, target_mod);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

IntPoly balanced_lift(const PM& a, const Int& m) {
  std::vector<Int> c;
  c.reserve(a.size());
  Int half = m / 2;
  for (const Int& v : a) c.push_back(v > half ? Int(v - m) : v);
  return IntPoly(std::move(c));
}

std::uint64_t next_prime_after(std::uint64_t p) {
  ++p;
  while (!is_prime_u64(p)) ++p;
  return p;
}

Int isqrt_ceil(const Int& n) {
  Int r = boost::multiprecision::sqrt(n);
  if (r * r < n) ++r;
  return r;
}

// Factors a squarefree primitive polynomial (positive lc, degree >= 1) into
// irreducibles over Q.
std::vector<IntPoly> zassenhaus_squarefree(const IntPoly& g) {
  int n = g.degree();
  if (n == 1) return {g};
  const Int& lc = g.lc();

  // Monicize: F(x) = lc^(n-1) * g(x/lc).
  std::vector<Int> fc(n + 1);
  Int pw = 1;
  for (int i = n; i >= 0; --i) {
    fc[i] = g.coeff(i) * pw;
    if (i > 0) pw *= lc;
  }
  IntPoly F(std::move(fc));
  Int disc = discriminant(F);

  std::uint64_t p = 1;
  do {
    p = next_prime_after(p);
  } while (disc % Int(p) == 0);

  ModPoly fp = mod_reduce(F, static_cast<std::int64_t>(p));
  auto modfacts = mod_factor(fp);
  if (modfacts.size() == 1) {
    // still check the exponent; squarefree mod p by choice of p
    return {g};
  }
  std::vector<PM> factors_p;
  for (auto& [q, e] : modfacts) {
    if (e != 1) throw resource_error("zassenhaus: chosen prime not squarefree");
    PM a;
    a.reserve(q.c.size());
    for (std::int64_t v : q.c) a.push_back(Int(v));
    factors_p.push_back(std::move(a));
  }

  // Landau-Mignotte: any monic factor of monic F has coefficients bounded by
  // 2^n * ||F||_2.
  Int norm_sq = 0;
  for (const Int& v : F.coeffs()) norm_sq += v * v;
  Int bound = (Int(1) << n) * (isqrt_ceil(norm_sq) + 1);
  Int target = 2 * bound + 1;
  Int target_mod = p;
  while (target_mod < target) target_mod *= target_mod;

  std::vector<PM> lifted = lift_tree(F, factors_p, Int(p), target_mod);

  // Subset recombination.
  std::vector<IntPoly> monic_factors;
  IntPoly grem = F;
  std::vector<PM> pool = lifted;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      PM prod = {Int(1)};
      for (std::size_t i : idx) prod = pm_mul(prod, pool[i], target_mod);
      IntPoly cand = balanced_lift(prod, target_mod);
      if (!cand.is_zero() && cand.degree() >= 1 && cand.divides(grem)) {
        monic_factors.push_back(cand);
        grem = grem.divide_exact(cand);
        std::vector<PM> next;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            next.push_back(pool[i]);
        pool = std::move(next);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (grem.degree() >= 1) monic_factors.push_back(grem);

  // Map factors of F back to factors of g: h(x) = pp(H(lc*x)).
  std::vector<IntPoly> out;
  for (const IntPoly& H : monic_factors) {
    std::vector<Int> hc(H.coeffs());
    Int s = 1;
    for (std::size_t i = 0; i < hc.size(); ++i) {
      hc[i] *= s;
      s *= lc;
    }
    out.push_back(IntPoly(std::move(hc)).primitive_part());
  }
  return out;
}

}  // namespace

PolyFactorization factor_over_q(const IntPoly& f) {
  if (f.is_zero()) throw validation_error("factor_over_q: zero polynomial");
  if (f.degree() > 16)
    throw resource_error("factor_over_q: degree cap is 16");
  PolyFactorization out;
  Int cont = f.content();
  if (!f.is_zero() && f.lc() < 0) cont = -cont;
  out.content = cont;
  if (f.degree() < 1) return out;
  for (const auto& [h, mult] : squarefree_decomposition(f)) {
    for (const IntPoly& u : zassenhaus_squarefree(h))
      out.factors.emplace_back(u, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.coeffs() < b.first.coeffs();
            });
  return out;
}

bool is_irreducible_over_q(const IntPoly& f) {
  if (f.degree() < 1) return false;
  PolyFactorization fac = factor_over_q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace orbistat::poly
