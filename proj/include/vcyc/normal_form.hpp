#pragma once

#include <vector>

#include "vcyc/int_matrix.hpp"

namespace vcyc::linalg {

struct HermiteForm {
  IntMatrix H;  // column-style HNF, H = M * U
  IntMatrix U;  // unimodular, cols(M) x cols(M)
  std::size_t rank = 0;
};

/// Column Hermite normal form: pivots positive, entries to the left of a
/// pivot reduced into [0, pivot), zero columns rightmost.
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix D;  // D = S * M * T
  IntMatrix S;
  IntMatrix T;
  std::vector<Integer> invariants;  // nonzero diagonal entries, d1 | d2 | ...
};

SmithForm snf(const IntMatrix& m);

/// Nonzero Smith invariants only; skips the transform bookkeeping.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Whether H satisfies the column HNF conventions used by hnf().
bool is_column_hnf(const IntMatrix& h);

}  // namespace vcyc::linalg
