#include "orbistat/binary_form.hpp"

#include <algorithm>
#include <limits>

#include "orbistat/errors.hpp"

namespace orbistat::poly {

namespace {
Int pow_int(const Int& b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace

BinaryForm::BinaryForm(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw validation_error("binary form needs coefficients");
}

BinaryForm BinaryForm::from_i64(const std::vector<std::int64_t>& coeffs) {
  return BinaryForm(std::vector<Int>(coeffs.begin(), coeffs.end()));
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

const Int& BinaryForm::coeff(int i) const {
  if (i < 0 || i > degree()) throw validation_error("coefficient index out of range");
  return c_[i];
}

std::string BinaryForm::str() const {
  int n = degree();
  std::string out;
  for (int k = n; k >= 0; --k) {
    const Int& c = c_[k];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    int e1 = n - k;
    std::string mono;
    if (k > 0) {
      mono += "x0";
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (e1 > 0) {
      if (!mono.empty()) mono += "*";
      mono += "x1";
      if (e1 > 1) mono += "^" + std::to_string(e1);
    }
    std::string term = mono.empty() ? a.str()
                       : a == 1     ? mono
                                    : a.str() + "*" + mono;
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

Int BinaryForm::evaluate(const Int& x0, const Int& x1) const {
  // sum c_k x0^k x1^(n-k), Horner in x0 with a running power of x1.
  int n = degree();
  Int acc = 0;
  for (int k = n; k >= 0; --k) acc = acc * x0 + c_[k] * pow_int(x1, n - k);
  return acc;
}

std::int64_t BinaryForm::evaluate_i64(std::int64_t x0, std::int64_t x1) const {
  int n = degree();
  int bits = 1;
  auto blen = [](std::int64_t v) {
    std::uint64_t a = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1
                            : static_cast<std::uint64_t>(v);
    int b = 0;
    while (a) ++b, a >>= 1;
    return b;
  };
  int cmax = 1;
  for (const Int& v : c_) {
    if (v > (std::numeric_limits<std::int64_t>::max)() ||
        v < (std::numeric_limits<std::int64_t>::min)())
      throw resource_error("evaluate_i64: coefficient too large");
    cmax = std::max(cmax, blen(v.template convert_to<std::int64_t>()));
  }
  bits = n * std::max(blen(x0), blen(x1)) + cmax + n + 2;
  if (bits >= 120) throw resource_error("evaluate_i64: overflow risk");
  __int128 acc = 0;
  for (int k = n; k >= 0; --k) {
    __int128 pw = 1;
    for (int i = 0; i < n - k; ++i) pw *= x1;
    acc = acc * x0 + static_cast<__int128>(c_[k].template convert_to<std::int64_t>()) * pw;
  }
  if (acc > (std::numeric_limits<std::int64_t>::max)() ||
      acc < (std::numeric_limits<std::int64_t>::min)())
    throw resource_error("evaluate_i64: result out of range");
  return static_cast<std::int64_t>(acc);
}

IntPoly BinaryForm::dehomogenize() const { return IntPoly(c_); }

const Int& BinaryForm::value_at_infinity() const { return c_.back(); }

IntPoly BinaryForm::specialize(int d, const Int& v0, const Int& v1) const {
  if (d < 1) throw validation_error("specialize: d must be >= 1");
  if (v0 == 0 || v1 == 0)
    throw validation_error("specialize: v0 and v1 must be nonzero");
  int n = degree();
  std::vector<Int> g(static_cast<std::size_t>(d) * n + 1, Int(0));
  for (int k = 0; k <= n; ++k)
    g[static_cast<std::size_t>(d) * k] += c_[k] * pow_int(v0, k) * pow_int(v1, n - k);
  IntPoly out(std::move(g));
  if (out.is_zero())
    throw validation_error("specialize: form vanishes identically at v");
  return out.primitive_part();
}

bool BinaryForm::proportional_to(const BinaryForm& o) const {
  if (degree() != o.degree()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = i + 1; j < c_.size(); ++j)
      if (c_[i] * o.c_[j] != c_[j] * o.c_[i]) return false;
  return true;
}

Int form_resultant(const BinaryForm& f, const BinaryForm& g) {
  // Sylvester determinant on the full homogeneous coefficient arrays; the
  // fraction-free elimination keeps everything integral.
  int m = f.degree(), n = g.degree();
  int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Int>> a(N, std::vector<Int>(N, Int(0)));
  // rows 0..n-1: shifts of f's coefficients, highest degree first
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = f.coeffs()[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = g.coeffs()[n - k];
  // Bareiss
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
    denom = a[k][k];
  }
  return sign > 0 ? a[N - 1][N - 1] : -a[N - 1][N - 1];
}

}  // namespace orbistat::poly
