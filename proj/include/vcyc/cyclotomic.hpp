#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "vcyc/int_matrix.hpp"
#include "vcyc/int_poly.hpp"
#include "vcyc/lattice.hpp"

namespace vcyc::linalg {

std::uint64_t totient(std::uint64_t d);

/// The d-th cyclotomic polynomial, by dividing x^d - 1 by the smaller ones.
IntPoly cyclotomic_poly(std::uint64_t d);

struct CyclotomicFactorization {
  std::map<std::uint64_t, std::size_t> factors;  // order d -> multiplicity
  IntPoly remainder;                              // monic, no cyclotomic factor
};

/// Trial division by every Phi_d with totient(d) <= deg(p). Requires p monic.
CyclotomicFactorization cyclotomic_factorization(const IntPoly& p);

/// Order of a matrix in GL_n(Z); empty means infinite order.
class MatrixOrder {
 public:
  static MatrixOrder infinite() { return MatrixOrder(); }
  static MatrixOrder finite(std::uint64_t k) { return MatrixOrder(k); }
  bool is_finite() const { return order_.has_value(); }
  std::uint64_t value() const { return order_.value(); }
  friend bool operator==(const MatrixOrder&, const MatrixOrder&) = default;

 private:
  MatrixOrder() = default;
  explicit MatrixOrder(std::uint64_t k) : order_(k) {}
  std::optional<std::uint64_t> order_;
};

/// Requires |det A| = 1.
MatrixOrder matrix_order(const IntMatrix& a);

/// The saturated lattice ker(A^k - I).
Lattice fixed_lattice(const IntMatrix& a, std::uint64_t k);

struct MaxFixedRank {
  std::uint64_t k_star = 1;  // lcm of the cyclotomic orders present
  std::size_t rank = 0;
  Lattice lattice;  // fixed_lattice(A, k_star)
};

/// Requires |det A| = 1. rank is the maximum over k >= 1 of rank ker(A^k - I).
MaxFixedRank max_fixed_rank(const IntMatrix& a);

/// lcm{d : totient(d) <= n}, capped at 2520.
std::uint64_t default_oracle_depth(std::size_t n);

}  // namespace vcyc::linalg
