#include "orbistat/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "orbistat/errors.hpp"
#include "orbistat/modpoly.hpp"
#include "orbistat/parallel.hpp"

namespace orbistat::sieve {

namespace {

std::int64_t mod_pos(const Int& v, std::int64_t m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

std::int64_t pow_mod(std::int64_t b, int e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  for (int i = 0; i < e; ++i) r = r * b % m;
  return r;
}

// Whether the local event at the fibre is active at p: the fibre exists, is
// not split, and frobenius does not fix a minimal-multiplicity component.
bool event_active(const orb::ClosedPointFibre* f, std::int64_t p) {
  if (!f || f->split) return false;
  return !frob::fixes_component(f->min_mult_field, p);
}

struct SieveModel {
  const orb::ClosedPointFibre* fz = nullptr;
  const orb::ClosedPointFibre* fi = nullptr;
  std::vector<const orb::ClosedPointFibre*> middles;
  int m0 = 1, m1 = 1;
};

SieveModel build_model(const orb::FibrationDescriptor& desc, std::int64_t p,
                       const Int& v0, const Int& v1) {
  if (p < 2) throw validation_error("sieve density: p must be a prime");
  if (desc.bad_primes.count(p))
    throw validation_error("sieve density: p lies in the bad set");
  if (v0 % p == 0 || v1 % p == 0)
    throw validation_error("sieve density: p divides the twist");
  SieveModel m;
  m.fz = desc.fibre_at_zero();
  m.fi = desc.fibre_at_infinity();
  for (const orb::ClosedPointFibre& f : desc.points)
    if (&f != m.fz && &f != m.fi) {
      if (!f.split && f.min_multiplicity() != 1)
        throw validation_error(
            "sieve density: middle fibres must have multiplicity 1");
      m.middles.push_back(&f);
    }
  m.m0 = m.fz ? m.fz->min_multiplicity() : 1;
  m.m1 = m.fi ? m.fi->min_multiplicity() : 1;
  return m;
}

}  // namespace

std::int64_t nu_point_count(std::int64_t p, const poly::BinaryForm& h, int e0,
                            int e1, const Int& v0, const Int& v1) {
  if (p < 2 || p > (1 << 30)) throw validation_error("nu: bad prime");
  if (e0 < 1 || e1 < 1) throw validation_error("nu: exponents must be >= 1");
  int n = h.degree();
  std::vector<std::int64_t> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = mod_pos(h.coeffs()[k], p);
  std::int64_t w0 = mod_pos(v0, p), w1 = mod_pos(v1, p);

  std::int64_t total = 0;
  for (std::int64_t t0 = 0; t0 < p; ++t0) {
    // Coefficient of t1^(e1*(n-k)) is c_k * (v0 t0^e0)^k * v1^(n-k).
    std::int64_t a = pow_mod(t0, e0, p);
    poly::ModPoly q;
    q.p = p;
    q.c.assign(static_cast<std::size_t>(e1) * n + 1, 0);
    for (int k = 0; k <= n; ++k) {
      std::int64_t term = c[k] * pow_mod(w0 * a % p, k, p) % p;
      term = term * pow_mod(w1, n - k, p) % p;
      q.c[static_cast<std::size_t>(e1) * (n - k)] =
          (q.c[static_cast<std::size_t>(e1) * (n - k)] + term) % p;
    }
    q.trim();
    if (q.is_zero()) {
      total += p;
    } else if (q.degree() == 0) {
      // no roots
    } else {
      total += poly::count_roots_modpoly(q);
    }
  }
  return total;
}

double omega_bar_main(const orb::FibrationDescriptor& desc, std::int64_t p,
                      const Int& v0, const Int& v1) {
  SieveModel m = build_model(desc, p, v0, v1);
  double w = 0.0;
  double dp = static_cast<double>(p);
  if (event_active(m.fz, p)) w += 1.0 / dp;
  if (event_active(m.fi, p)) w += 1.0 / dp;
  for (const orb::ClosedPointFibre* f : m.middles)
    if (event_active(f, p)) {
      std::int64_t nu = nu_point_count(p, f->form, m.m0, m.m1, v0, v1);
      w += static_cast<double>(nu) / (dp * dp);
    }
  return std::clamp(w, 0.0, 1.0 - 1e-9);
}

double omega_bar_exact(const orb::FibrationDescriptor& desc, std::int64_t p,
                       const Int& v0, const Int& v1) {
  if (p > 37) throw resource_error("exact sieve density: p must be <= 37");
  SieveModel m = build_model(desc, p, v0, v1);
  std::int64_t p2 = p * p;
  std::int64_t w0 = mod_pos(v0, p2), w1 = mod_pos(v1, p2);

  bool ez = event_active(m.fz, p);
  bool ei = event_active(m.fi, p);
  std::vector<const orb::ClosedPointFibre*> active;
  for (const orb::ClosedPointFibre* f : m.middles)
    if (event_active(f, p)) active.push_back(f);

  std::int64_t hits = 0;
  for (std::int64_t t0 = 0; t0 < p2; ++t0)
    for (std::int64_t t1 = 0; t1 < p2; ++t1) {
      bool in_union = false;
      if (ez && t0 % p == 0 && t0 % p2 != 0) in_union = true;
      if (!in_union && ei && t1 % p == 0 && t1 % p2 != 0) in_union = true;
      if (!in_union && !active.empty()) {
        std::int64_t a0 = w0 * pow_mod(t0, m.m0, p2) % p2;
        std::int64_t a1 = w1 * pow_mod(t1, m.m1, p2) % p2;
        for (const orb::ClosedPointFibre* f : active) {
          int n = f->form.degree();
          std::int64_t g = 0;
          for (int k = 0; k <= n; ++k) {
            std::int64_t term = mod_pos(f->form.coeffs()[k], p2);
            term = term * pow_mod(a0, k, p2) % p2;
            term = term * pow_mod(a1, n - k, p2) % p2;
            g = (g + term) % p2;
          }
          if (g % p == 0 && g != 0) {
            in_union = true;
            break;
          }
        }
      }
      if (in_union) ++hits;
    }
  return static_cast<double>(hits) /
         (static_cast<double>(p2) * static_cast<double>(p2));
}

double large_sieve_l(std::int64_t Q,
                     const std::vector<std::pair<std::int64_t, double>>& omega) {
  if (Q < 1) throw validation_error("L(Q): Q must be >= 1");
  std::vector<std::pair<std::int64_t, double>> ps(omega);
  std::sort(ps.begin(), ps.end());
  for (const auto& [p, w] : ps) {
    if (p < 2) throw validation_error("L(Q): bad prime");
    if (w < 0.0 || w >= 1.0)
      throw validation_error("L(Q): densities must lie in [0, 1)");
  }
  // DFS over squarefree products q <= Q.
  double total = 0.0;
  std::vector<std::pair<std::int64_t, double>> stack;
  std::function<void(std::size_t, std::int64_t, double)> dfs =
      [&](std::size_t i, std::int64_t q, double prod) {
        total += prod;
        for (std::size_t j = i; j < ps.size(); ++j) {
          if (ps[j].first > Q / q) break;
          dfs(j + 1, q * ps[j].first, prod * ps[j].second / (1.0 - ps[j].second));
        }
      };
  dfs(0, 1, 1.0);
  return total;
}

double large_sieve_bound(double B0, double B1, int m, std::int64_t Q, double L) {
  if (m < 1) throw validation_error("sieve bound: m must be >= 1");
  if (Q < 1) throw validation_error("sieve bound: Q must be >= 1");
  if (L <= 0) throw validation_error("sieve bound: L must be positive");
  double q2m = std::pow(static_cast<double>(Q), 2.0 * m);
  return (B0 + q2m) * (B1 + q2m) / L;
}

LogSum chebotarev_logsum(const frob::FrobenianSet& T, std::int64_t x,
                         double complement_density,
                         const poly::PrimeTable& table) {
  if (x < 3) throw validation_error("log sum: x must be >= 3");
  if (static_cast<std::int64_t>(table.bound()) < x)
    throw resource_error("log sum: prime table smaller than x");
  const auto& primes = table.primes();
  std::int64_t np = 0;
  while (np < static_cast<std::int64_t>(primes.size()) && primes[np] <= x) ++np;
  LogSum out;
  out.sum = parallel_range<double>(
      0, np, 0.0,
      [&](std::int64_t lo, std::int64_t hi, double& acc) {
        for (std::int64_t i = lo; i < hi; ++i) {
          std::int64_t p = primes[i];
          if (T.is_excluded(p)) continue;
          if (!T.contains(p)) acc += 1.0 / static_cast<double>(p);
        }
      },
      [](double& a, const double& b) { a += b; });
  out.main = complement_density * std::log(std::log(static_cast<double>(x)));
  out.difference = out.sum - out.main;
  return out;
}

}  // namespace orbistat::sieve
