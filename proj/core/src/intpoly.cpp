#include "orbistat/intpoly.hpp"

#include <sstream>

#include "orbistat/errors.hpp"

namespace orbistat::poly {

namespace {
Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_i64(const std::vector<std::int64_t>& coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(c));
}

const Int& IntPoly::coeff(int i) const {
  static const Int zero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const Int& IntPoly::lc() const {
  if (c_.empty()) throw validation_error("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& k) const {
  std::vector<Int> r = c_;
  for (Int& v : r) v *= k;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
  return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
  Int v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Rat(*it);
  return v;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& v : c_) g = int_gcd(g, v);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (lc() < 0) g = -g;
  std::vector<Int> r = c_;
  for (Int& v : r) v /= g;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& o) const {
  if (o.is_zero()) throw validation_error("division by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < o.degree())
    throw validation_error("exact polynomial division failed");
  std::vector<Int> rem = c_;
  std::vector<Int> q(degree() - o.degree() + 1, 0);
  for (int i = degree() - o.degree(); i >= 0; --i) {
    Int num = rem[i + o.degree()];
    if (num == 0) continue;
    if (num % o.lc() != 0)
      throw validation_error("exact polynomial division failed");
    Int t = num / o.lc();
    q[i] = t;
    for (int j = 0; j <= o.degree(); ++j) rem[i + j] -= t * o.coeff(j);
  }
  for (const Int& v : rem)
    if (v != 0) throw validation_error("exact polynomial division failed");
  return IntPoly(std::move(q));
}

bool IntPoly::divides(const IntPoly& o) const {
  if (is_zero()) return o.is_zero();
  if (o.is_zero()) return true;
  if (o.degree() < degree()) return false;
  try {
    (void)o.divide_exact(*this);
    return true;
  } catch (const validation_error&) {
    return false;
  }
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& v = c_[i];
    if (v == 0) continue;
    Int a = v < 0 ? Int(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly poly_x() { return IntPoly{Int(0), Int(1)}; }
IntPoly poly_const(Int v) { return IntPoly{std::move(v)}; }

namespace {

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
  IntPoly r = f;
  int d = f.degree() - g.degree();
  Int glc = g.lc();
  for (int i = 0; i <= d; ++i) {
    if (r.is_zero() || r.degree() < g.degree()) {
      r = r.scaled(glc);
      continue;
    }
    int k = r.degree() - g.degree();
    Int rl = r.lc();
    std::vector<Int> nr(r.coeffs());
    for (Int& v : nr) v *= glc;
    for (int j = 0; j <= g.degree(); ++j) nr[k + j] -= rl * g.coeff(j);
    r = IntPoly(std::move(nr));
  }
  return r;
}

Int int_pow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Int resultant(const IntPoly& f0, const IntPoly& g0) {
  if (f0.is_zero() || g0.is_zero()) return 0;
  if (f0.degree() == 0) return int_pow(f0.coeff(0), g0.degree());
  if (g0.degree() == 0) return int_pow(g0.coeff(0), f0.degree());

  // Subresultant PRS; sign tracked across swaps and odd-degree steps.
  IntPoly A = f0, B = g0;
  Int s = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    std::swap(A, B);
  }
  Int g = 1, h = 1;
  while (true) {
    int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = pseudo_rem(A, B);
    if (R.is_zero()) return 0;  // B nonconstant here, so a common factor exists
    A = B;
    B = R.divide_exact(poly_const(g * int_pow(h, delta)));
    g = A.lc();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = int_pow(g, delta) / int_pow(h, delta - 1);
    if (B.degree() == 0) {
      Int num = int_pow(B.coeff(0), A.degree());
      Int den = int_pow(h, A.degree() - 1);
      return s * (num / den);
    }
  }
}

Int discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw validation_error("discriminant needs degree >= 1");
  if (f.degree() == 1) return 1;
  Int r = resultant(f, f.derivative());
  Int d = r / f.lc();
  int n = f.degree();
  if (((static_cast<long long>(n) * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return g.is_zero() ? IntPoly() : g.primitive_part();
  if (g.is_zero()) return f.primitive_part();
  IntPoly a = f.primitive_part(), b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b).primitive_part();
    a = b;
    b = r;
    if (!b.is_zero() && a.degree() < b.degree()) std::swap(a, b);
  }
  return a.primitive_part();
}

}  // namespace orbistat::poly
