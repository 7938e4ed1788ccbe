#pragma once

#include <utility>
#include <vector>

#include "orbistat/intpoly.hpp"

namespace orbistat::poly {

// f = content * prod factors[i].first ^ factors[i].second, with each factor
// irreducible over Q, primitive, positive leading coefficient; factors sorted
// by (degree, coefficient vector).
struct PolyFactorization {
  Int content = 1;
  std::vector<std::pair<IntPoly, int>> factors;

  IntPoly product() const;
};

// Squarefree part h1*h2*...*hk of the squarefree decomposition f = prod hi^i,
// returned as (hi, i) with deg hi possibly 0 dropped.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// Zassenhaus: squarefree decomposition, factorization modulo a good prime,
// Hensel lifting past the coefficient bound, subset recombination.
// Degree cap 16 (resource_error beyond); validation_error on the zero
// polynomial.
PolyFactorization factor_over_q(const IntPoly& f);

bool is_irreducible_over_q(const IntPoly& f);

}  // namespace orbistat::poly
