#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vcyc/int_matrix.hpp"

namespace vcyc {

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with d1 | d2 | ...
/// and every di >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Accepts any list of cyclic orders (0 meaning Z); units are dropped and
  /// the torsion part is brought into invariant-factor form.
  static AbelianGroup from_cyclic_orders(std::size_t free_rank, const std::vector<Integer>& orders);
  static AbelianGroup free(std::size_t rank) { return from_cyclic_orders(rank, {}); }
  static AbelianGroup cyclic(const Integer& order);
  /// Z^rows / image(M).
  static AbelianGroup cokernel(const linalg::IntMatrix& m);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_cyclic() const { return free_rank_ + torsion_.size() <= 1; }
  /// Number of cyclic factors in the invariant-factor decomposition.
  std::size_t minimal_generators() const { return free_rank_ + torsion_.size(); }

  AbelianGroup direct_sum(const AbelianGroup& other) const;

  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

}  // namespace vcyc
