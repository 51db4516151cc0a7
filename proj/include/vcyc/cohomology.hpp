#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vcyc/abelian_group.hpp"
#include "vcyc/dim_engine.hpp"
#include "vcyc/group_spec.hpp"
#include "vcyc/lattice.hpp"

namespace vcyc::coh {

using linalg::IntMatrix;
using linalg::Lattice;

/// H^k(Z^n semidirect_A Z) for k = 0..n+1.
struct CohomologyTable {
  std::vector<AbelianGroup> groups;
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// Both halves of degree k of the Wang sequence:
/// 0 -> coker(L^{k-1}(A^T) - I) -> H^k -> ker(L^k(A^T) - I) -> 0.
struct WangStage {
  AbelianGroup cokernel_part;
  std::size_t kernel_rank = 0;
};

/// Requires |det A| = 1.
WangStage wang_stage(const IntMatrix& a, std::size_t k);

/// Requires an n x n matrix with |det A| = 1. The kernel half is free, so the
/// sequence splits and H^k is the direct sum of the two halves.
CohomologyTable wang_cohomology(std::size_t n, const IntMatrix& a);

/// Z when det A = +1, Z/2 when det A = -1.
AbelianGroup top_cohomology(std::size_t n, const IntMatrix& a);

/// Alternating sum of free ranks.
long euler_characteristic(const CohomologyTable& t);

struct MVCertificate {
  std::size_t degree = 0;
  AbelianGroup source_group;
  std::size_t target_count = 0;
  /// Inside `ambient`, two rank-1 saturated sublattices meeting trivially.
  std::vector<Lattice> classes;
  std::string ambient;
  std::string conclusion;
  friend bool operator==(const MVCertificate&, const MVCertificate&) = default;
};

/// Requires a spec whose case is PolyZ_Many.
MVCertificate mv_case3_certificate(const model::GroupSpec& g);

/// Structural check: cyclic source, at least two classes, each saturated of
/// rank 1, spanning rank 2 together.
bool certificate_holds(const MVCertificate& c);

}  // namespace vcyc::coh
