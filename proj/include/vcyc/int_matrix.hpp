#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vcyc/integer.hpp"

namespace vcyc::linalg {

/// Dense row-major matrix over the integers.
///
/// Matrices act on column vectors. An endomorphism of Z^n is recorded by the
/// images of the standard basis vectors, stored as columns.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols_if_empty = 0);
  /// Columns of the result are the given vectors; each must have length `n`.
  static IntMatrix from_columns(std::size_t n, const std::vector<std::vector<Integer>>& cols);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const Integer> entries() const { return entries_; }

  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;
  std::vector<std::vector<Integer>> to_rows() const;

  IntMatrix transpose() const;
  IntMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;

  bool is_zero() const;
  bool is_identity() const;

  /// Requires a square matrix; A^0 = I.
  IntMatrix power(std::uint64_t k) const;
  /// Fraction-free (Bareiss) determinant; square only.
  Integer determinant() const;
  /// Rank over the rationals.
  std::size_t rank() const;
  Integer trace() const;

  std::vector<Integer> apply(std::span<const Integer> v) const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);

 private:
  void require_square(const char* op) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Matrix of the k-th exterior power in the lexicographic basis of k-subsets.
IntMatrix exterior_power(const IntMatrix& a, std::size_t k);

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

/// Whether M is skew-symmetric with zero diagonal.
bool is_alternating(const IntMatrix& m);

}  // namespace vcyc::linalg
