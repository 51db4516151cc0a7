#include "vcyc/lattice.hpp"

#include <optional>
#include <stdexcept>

#include "vcyc/normal_form.hpp"

namespace vcyc::linalg {

Lattice::Lattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(ambient_rank, 0) {}

Lattice Lattice::span(const IntMatrix& generators) {
  Lattice l;
  l.ambient_ = generators.rows();
  HermiteForm h = hnf(generators);
  l.basis_ = h.H.columns(0, h.rank);
  return l;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  return span(IntMatrix::identity(ambient_rank));
}

bool Lattice::contains(std::span<const Integer> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("lattice membership: dimension mismatch");
  std::vector<Integer> rest(v.begin(), v.end());
  std::size_t row = 0;
  for (std::size_t c = 0; c < basis_.cols(); ++c) {
    while (row < ambient_ && basis_(row, c) == 0) {
      if (rest[row] != 0) return false;
      ++row;
    }
    const Integer& p = basis_(row, c);
    if (rest[row] % p != 0) return false;
    Integer q = rest[row] / p;
    for (std::size_t r = row; r < ambient_; ++r) rest[r] -= q * basis_(r, c);
    ++row;
  }
  for (std::size_t r = row; r < ambient_; ++r)
    if (rest[r] != 0) return false;
  return true;
}

Integer Lattice::saturation_index() const {
  Integer idx = 1;
  for (const auto& d : smith_invariants(basis_)) idx *= d;
  return idx;
}

bool Lattice::is_saturated() const { return saturation_index() == 1; }

bool Lattice::is_invariant_under(const IntMatrix& a) const {
  if (!a.is_square() || a.rows() != ambient_) return false;
  for (std::size_t c = 0; c < rank(); ++c) {
    auto image = a.apply(basis_.column(c));
    if (!contains(image)) return false;
  }
  return true;
}

Lattice kernel_lattice(const IntMatrix& m) {
  HermiteForm h = hnf(m);
  return Lattice::span(h.U.columns(h.rank, m.cols() - h.rank));
}

Lattice saturate(const Lattice& l) {
  Lattice orth = kernel_lattice(l.basis().transpose());
  return kernel_lattice(orth.basis().transpose());
}

bool is_sublattice(const Lattice& inner, const Lattice& outer) {
  if (inner.ambient_rank() != outer.ambient_rank()) return false;
  for (std::size_t c = 0; c < inner.rank(); ++c)
    if (!outer.contains(inner.basis_vector(c))) return false;
  return true;
}

}  // namespace vcyc::linalg
