#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "orbistat/rational.hpp"

namespace orbistat::poly {

// Dense univariate polynomial over Z, coefficients constant-first.
// Normalized: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly from_i64(const std::vector<std::int64_t>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& lc() const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const Int& k) const;
  IntPoly derivative() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  Int content() const;          // gcd of coefficients, >= 0 (0 for zero poly)
  IntPoly primitive_part() const;  // content removed, leading coefficient > 0

  // Exact division; throws validation_error if o does not divide *this over Q
  // with integer quotient.
  IntPoly divide_exact(const IntPoly& o) const;
  bool divides(const IntPoly& o) const;  // *this | o in Z[x]

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> c_;
};

IntPoly poly_x();            // x
IntPoly poly_const(Int v);   // constant

// Resultant via the subresultant polynomial remainder sequence.
Int resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^(n(n-1)/2) * res(f, f') / lc(f), n = deg f >= 1.
Int discriminant(const IntPoly& f);

// gcd in Q[x] returned as a primitive integer polynomial (positive lc);
// gcd(0,0) = 0.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

}  // namespace orbistat::poly
