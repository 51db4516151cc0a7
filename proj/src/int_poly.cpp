#include "vcyc/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vcyc::linalg {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntMatrix IntPoly::evaluate(const IntMatrix& a) const {
  if (!a.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  const std::size_t n = a.rows();
  IntMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

PolyDivision divmod_monic(const IntPoly& p, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw std::invalid_argument("divisor must be monic");
  std::vector<Integer> rem = p.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  if (rem.size() <= dd) return {IntPoly{}, p};
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    Integer q = rem[i];
    if (q == 0) continue;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly requires a square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Integer t = -(a * m).trace();
    Integer kk(static_cast<unsigned long>(k));
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = t;
  }
  return IntPoly(std::move(c));
}

}  // namespace vcyc::linalg
