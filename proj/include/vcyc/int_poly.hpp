#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "vcyc/int_matrix.hpp"
#include "vcyc/integer.hpp"

namespace vcyc::linalg {

/// Polynomial with integer coefficients, stored in ascending degree order.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(std::size_t degree, const Integer& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Integer coefficient(std::size_t i) const;

  Integer evaluate(const Integer& x) const;
  /// Horner evaluation at a square matrix.
  IntMatrix evaluate(const IntMatrix& a) const;

  std::string to_string() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic polynomial; exact over the integers.
PolyDivision divmod_monic(const IntPoly& p, const IntPoly& divisor);

/// det(x I - A) by Faddeev-LeVerrier with exact division. The 0x0 case is 1.
IntPoly char_poly(const IntMatrix& a);

}  // namespace vcyc::linalg
