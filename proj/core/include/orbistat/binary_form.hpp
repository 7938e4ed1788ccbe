#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbistat/intpoly.hpp"

namespace orbistat::poly {

// Homogeneous binary form g(x0, x1) of degree n, stored as n+1 coefficients
// c_0..c_n with c_k the coefficient of x0^k * x1^(n-k).  Dehomogenizing at
// x1 = 1 therefore yields the constant-first polynomial with the same
// coefficient vector.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Int> coeffs);
  static BinaryForm from_i64(const std::vector<std::int64_t>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& coeff(int i) const;
  bool is_zero() const;
  std::string str() const;  // in the variables x0, x1

  Int evaluate(const Int& x0, const Int& x1) const;
  // Fast path for small inputs; throws resource_error on overflow risk.
  std::int64_t evaluate_i64(std::int64_t x0, std::int64_t x1) const;

  // g(x, 1) as a polynomial in x.
  IntPoly dehomogenize() const;
  // g(1, 0): vanishes exactly when x1 divides the form.
  const Int& value_at_infinity() const;

  // G(x) = g(v0 * x^d, v1) = v0^n * g(x^d, v1/v0), content removed, positive
  // leading coefficient.  The factor structure over Q is what matters.
  IntPoly specialize(int d, const Int& v0, const Int& v1) const;

  bool proportional_to(const BinaryForm& o) const;

 private:
  std::vector<Int> c_;
};

// res(f, g) for binary forms: the resultant of the dehomogenizations with the
// standard lc corrections; 0 iff the forms share a projective zero.
Int form_resultant(const BinaryForm& f, const BinaryForm& g);

}  // namespace orbistat::poly
