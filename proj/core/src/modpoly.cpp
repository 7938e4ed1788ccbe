#include "orbistat/modpoly.hpp"

#include <algorithm>

#include "orbistat/errors.hpp"

namespace orbistat::poly {

namespace {

std::int64_t mulp(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powp(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulp(r, a, p);
    a = mulp(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invp(std::int64_t a, std::int64_t p) { return powp(a, p - 2, p); }

}  // namespace

void ModPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly mod_reduce(const IntPoly& f, std::int64_t p) {
  ModPoly r;
  r.p = p;
  r.c.reserve(f.coeffs().size());
  for (const Int& v : f.coeffs()) {
    Int m = v % p;
    if (m < 0) m += p;
    r.c.push_back(m.template convert_to<std::int64_t>());
  }
  r.trim();
  return r;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
  ModPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = static_cast<std::int64_t>(
          (static_cast<__int128>(a.c[i]) * b.c[j] + r.c[i + j]) % a.p);
  }
  r.trim();
  return r;
}

ModPoly mod_rem(const ModPoly& a, const ModPoly& m) {
  if (m.is_zero()) throw validation_error("mod_rem by zero polynomial");
  ModPoly r = a;
  std::int64_t inv_lc = invp(m.c.back(), m.p);
  while (!r.is_zero() && r.degree() >= m.degree()) {
    int k = r.degree() - m.degree();
    std::int64_t t = mulp(r.c.back(), inv_lc, m.p);
    for (int j = 0; j <= m.degree(); ++j)
      r.c[k + j] = (r.c[k + j] - mulp(t, m.c[j], m.p) + m.p) % m.p;
    r.trim();
  }
  return r;
}

// Exact quotient a / m, throws if the remainder is nonzero.
static ModPoly mod_div_exact(const ModPoly& a, const ModPoly& m) {
  if (m.is_zero()) throw validation_error("mod_div_exact by zero polynomial");
  ModPoly r = a;
  ModPoly q;
  q.p = a.p;
  if (a.degree() < m.degree())
    throw validation_error("mod_div_exact: degree too small");
  q.c.assign(a.degree() - m.degree() + 1, 0);
  std::int64_t inv_lc = invp(m.c.back(), m.p);
  while (!r.is_zero() && r.degree() >= m.degree()) {
    int k = r.degree() - m.degree();
    std::int64_t t = mulp(r.c.back(), inv_lc, m.p);
    q.c[k] = t;
    for (int j = 0; j <= m.degree(); ++j)
      r.c[k + j] = (r.c[k + j] - mulp(t, m.c[j], m.p) + m.p) % m.p;
    r.trim();
  }
  if (!r.is_zero()) throw validation_error("mod_div_exact: nonzero remainder");
  q.trim();
  return q;
}

ModPoly mod_monic(const ModPoly& a) {
  ModPoly r = a;
  if (r.is_zero()) return r;
  std::int64_t inv_lc = invp(r.c.back(), r.p);
  for (auto& v : r.c) v = mulp(v, inv_lc, r.p);
  return r;
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b) {
  ModPoly r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i)
    r.c[i] = (r.c[i] - b.c[i] % r.p + r.p) % r.p;
  r.trim();
  return r;
}

ModPoly mod_gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = mod_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return mod_monic(a);
}

ModPoly mod_xpow(std::int64_t e, const ModPoly& m) {
  ModPoly base;
  base.p = m.p;
  base.c = {0, 1};
  base = mod_rem(base, m);
  ModPoly acc;
  acc.p = m.p;
  acc.c = {1};
  acc = mod_rem(acc, m);
  while (e) {
    if (e & 1) acc = mod_rem(mod_mul(acc, base), m);
    base = mod_rem(mod_mul(base, base), m);
    e >>= 1;
  }
  return acc;
}

int count_roots_modpoly(const ModPoly& f) {
  if (f.is_zero()) throw validation_error("root count of zero polynomial mod p");
  if (f.degree() == 0) return 0;
  ModPoly fm = mod_monic(f);
  if (fm.degree() == 1) return 1;
  ModPoly xp = mod_xpow(f.p, fm);
  ModPoly x;
  x.p = f.p;
  x.c = {0, 1};
  ModPoly d = mod_gcd(mod_sub(xp, mod_rem(x, fm)), fm);
  return d.degree();
}

int count_roots_mod_p(const IntPoly& f, std::int64_t p) {
  if (p < 2) throw validation_error("count_roots_mod_p: p must be prime");
  if (f.is_zero()) throw validation_error("count_roots_mod_p: zero polynomial");
  if (f.lc() % p == 0)
    throw validation_error("count_roots_mod_p: p divides the leading coefficient");
  return count_roots_modpoly(mod_reduce(f, p));
}

std::vector<std::int64_t> roots_mod_p_scan(const ModPoly& f) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < f.p; ++x) {
    std::int64_t v = 0;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
      v = (mulp(v, x, f.p) + *it) % f.p;
    if (v == 0) out.push_back(x);
  }
  return out;
}

namespace {

// Nullspace basis of (Frobenius - I) acting on F_p[x]/(f); its dimension is
// the number of distinct irreducible factors when f is squarefree.
std::vector<std::vector<std::int64_t>> berlekamp_kernel(const ModPoly& f) {
  int n = f.degree();
  std::int64_t p = f.p;
  std::vector<std::vector<std::int64_t>> M(n, std::vector<std::int64_t>(n, 0));
  ModPoly xp = mod_xpow(p, f);
  ModPoly cur;
  cur.p = p;
  cur.c = {1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      M[j][i] = j < static_cast<int>(cur.c.size()) ? cur.c[j] : 0;
    cur = mod_rem(mod_mul(cur, xp), f);
  }
  for (int i = 0; i < n; ++i) M[i][i] = (M[i][i] - 1 + p) % p;
  std::vector<int> pivot_col_of_row(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[rank]);
    std::int64_t inv = invp(M[rank][col], p);
    for (int j = 0; j < n; ++j) M[rank][j] = mulp(M[rank][j], inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      std::int64_t t = M[r][col];
      for (int j = 0; j < n; ++j)
        M[r][j] = (M[r][j] - mulp(t, M[rank][j], p) + p) % p;
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  std::vector<char> is_pivot(n, 0);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col_of_row[r]] = 1;
  std::vector<std::vector<std::int64_t>> basis;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<std::int64_t> v(n, 0);
    v[col] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = (p - M[r][col]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::pair<ModPoly, int>> mod_factor(const ModPoly& f_in) {
  if (f_in.is_zero()) throw validation_error("mod_factor of zero polynomial");
  std::int64_t p = f_in.p;
  ModPoly f = mod_monic(f_in);
  std::vector<ModPoly> irreducibles;
  std::vector<ModPoly> queue{f};
  while (!queue.empty()) {
    ModPoly g = std::move(queue.back());
    queue.pop_back();
    if (g.degree() <= 0) continue;
    if (g.degree() == 1) {
      irreducibles.push_back(g);
      continue;
    }
    ModPoly d;
    d.p = p;
    d.c.assign(g.c.size() - 1, 0);
    for (std::size_t i = 1; i < g.c.size(); ++i)
      d.c[i - 1] = mulp(g.c[i], static_cast<std::int64_t>(i % p), p);
    d.trim();
    if (d.is_zero()) {
      // g = h(x^p) = h(x)^p over F_p.
      ModPoly h;
      h.p = p;
      h.c.assign(g.degree() / p + 1, 0);
      for (int i = 0; i * p <= g.degree(); ++i)
        h.c[i] = g.c[static_cast<std::size_t>(i) * p];
      h.trim();
      queue.push_back(mod_monic(h));
      continue;
    }
    ModPoly sq = mod_gcd(g, d);
    if (sq.degree() > 0) {
      queue.push_back(sq);
      queue.push_back(mod_monic(mod_div_exact(g, sq)));
      continue;
    }
    auto basis = berlekamp_kernel(g);
    if (basis.size() <= 1) {
      irreducibles.push_back(g);
      continue;
    }
    // Some nonconstant kernel element splits g into proper gcd pieces.
    bool split = false;
    for (const auto& vc : basis) {
      ModPoly v;
      v.p = p;
      v.c = vc;
      v.trim();
      if (v.degree() <= 0) continue;
      for (std::int64_t c = 0; c < p && !split; ++c) {
        ModPoly shifted = v;
        shifted.c[0] = (shifted.c[0] - c % p + p) % p;
        shifted.trim();
        ModPoly d2 = mod_gcd(shifted, g);
        if (d2.degree() > 0 && d2.degree() < g.degree()) {
          queue.push_back(d2);
          queue.push_back(mod_monic(mod_div_exact(g, d2)));
          split = true;
        }
      }
      if (split) break;
    }
    if (!split)
      throw resource_error("mod_factor: Berlekamp split failed");  // unreachable
  }

  std::sort(irreducibles.begin(), irreducibles.end(),
            [](const ModPoly& a, const ModPoly& b) { return a.c < b.c; });
  irreducibles.erase(std::unique(irreducibles.begin(), irreducibles.end(),
                                 [](const ModPoly& a, const ModPoly& b) {
                                   return a.c == b.c;
                                 }),
                     irreducibles.end());
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly rem = f;
  for (const ModPoly& q : irreducibles) {
    int e = 0;
    while (rem.degree() >= q.degree() && mod_rem(rem, q).is_zero()) {
      rem = mod_div_exact(rem, q);
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  }
  return out;
}

}  // namespace orbistat::poly
