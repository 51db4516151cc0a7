#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vcyc/int_matrix.hpp"

namespace vcyc::linalg {

/// Sublattice of Z^n stored as a column-HNF basis (n rows, one column per
/// basis vector). Results of kernel_lattice, saturate and fixed_lattice are
/// saturated; Lattice::span may produce a finite-index sublattice.
class Lattice {
 public:
  Lattice() = default;
  /// The zero sublattice of Z^n.
  explicit Lattice(std::size_t ambient_rank);

  /// Integer span of the columns of `generators`.
  static Lattice span(const IntMatrix& generators);
  static Lattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<Integer> basis_vector(std::size_t i) const { return basis_.column(i); }

  bool contains(std::span<const Integer> v) const;
  /// (Q-span) intersected with Z^n equals the integer span.
  bool is_saturated() const;
  /// A maps the lattice into itself.
  bool is_invariant_under(const IntMatrix& a) const;
  /// Index of this lattice in its saturation.
  Integer saturation_index() const;

  friend bool operator==(const Lattice& a, const Lattice& b) = default;

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
};

/// The saturated lattice {v in Z^cols : M v = 0}.
Lattice kernel_lattice(const IntMatrix& m);

Lattice saturate(const Lattice& l);

/// Every basis vector of `inner` lies in `outer`.
bool is_sublattice(const Lattice& inner, const Lattice& outer);

}  // namespace vcyc::linalg
