#include "vcyc/normal_form.hpp"

#include <optional>
#include <utility>

namespace vcyc::linalg {
namespace {

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// col_dst += q * col_src
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += q * m(r, src);
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += q * m(src, c);
}

void negate_col(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

// Replaces columns (a, b) by (s*a + t*b, -(y/g)*a + (x/g)*b) where g = gcd of
// the entries x, y in row r. Determinant of the 2x2 transform is 1.
void gcd_combine_cols(IntMatrix& m, std::size_t r, std::size_t a, std::size_t b,
                      IntMatrix* track) {
  const Integer x = m(r, a);
  const Integer y = m(r, b);
  const ExtendedGcd e = extended_gcd(x, y);
  const Integer xg = x / e.g;
  const Integer yg = y / e.g;
  auto apply = [&](IntMatrix& t) {
    for (std::size_t i = 0; i < t.rows(); ++i) {
      Integer ca = t(i, a);
      Integer cb = t(i, b);
      t(i, a) = e.s * ca + e.t * cb;
      t(i, b) = -yg * ca + xg * cb;
    }
  };
  apply(m);
  if (track) apply(*track);
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < h.rows() && pivot_col < h.cols(); ++r) {
    // Gather the gcd of row r (columns pivot_col..) into pivot_col.
    std::optional<std::size_t> first;
    for (std::size_t c = pivot_col; c < h.cols(); ++c) {
      if (h(r, c) == 0) continue;
      if (!first) {
        first = c;
        continue;
      }
      gcd_combine_cols(h, r, *first, c, &u);
    }
    if (!first) continue;
    swap_cols(h, *first, pivot_col);
    swap_cols(u, *first, pivot_col);
    if (h(r, pivot_col) < 0) {
      negate_col(h, pivot_col);
      negate_col(u, pivot_col);
    }
    const Integer p = h(r, pivot_col);
    for (std::size_t c = 0; c < pivot_col; ++c) {
      Integer q = -floor_div(h(r, c), p);
      add_col(h, c, pivot_col, q);
      add_col(u, c, pivot_col, q);
    }
    ++pivot_col;
  }
  out.rank = pivot_col;
  return out;
}

bool is_column_hnf(const IntMatrix& h) {
  std::size_t col = 0;
  std::size_t last_row = 0;
  bool any = false;
  for (; col < h.cols(); ++col) {
    std::optional<std::size_t> lead;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      if (h(r, col) != 0) {
        lead = r;
        break;
      }
    }
    if (!lead) break;
    if (any && *lead <= last_row) return false;
    const Integer& p = h(*lead, col);
    if (p <= 0) return false;
    for (std::size_t c = 0; c < col; ++c)
      if (h(*lead, c) < 0 || h(*lead, c) >= p) return false;
    last_row = *lead;
    any = true;
  }
  for (std::size_t c = col; c < h.cols(); ++c)
    for (std::size_t r = 0; r < h.rows(); ++r)
      if (h(r, c) != 0) return false;
  return true;
}

namespace {

SmithForm smith(const IntMatrix& m, bool track) {
  SmithForm out;
  out.D = m;
  if (track) {
    out.S = IntMatrix::identity(m.rows());
    out.T = IntMatrix::identity(m.cols());
  }
  IntMatrix& d = out.D;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (d(r, c) != 0 && (!best || abs(d(r, c)) < abs(d(best->first, best->second))))
          best = {r, c};
    if (!best) break;
    swap_rows(d, t, best->first);
    swap_cols(d, t, best->second);
    if (track) {
      swap_rows(out.S, t, best->first);
      swap_cols(out.T, t, best->second);
    }
    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (d(r, t) == 0) continue;
      Integer q = -floor_div(d(r, t), d(t, t));
      add_row(d, r, t, q);
      if (track) add_row(out.S, r, t, q);
      if (d(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (d(t, c) == 0) continue;
      Integer q = -floor_div(d(t, c), d(t, t));
      add_col(d, c, t, q);
      if (track) add_col(out.T, c, t, q);
      if (d(t, c) != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility: fold an offending row into the pivot row and retry.
    std::optional<std::size_t> bad_row;
    for (std::size_t r = t + 1; r < rows && !bad_row; ++r)
      for (std::size_t c = t + 1; c < cols; ++c)
        if (d(r, c) % d(t, t) != 0) {
          bad_row = r;
          break;
        }
    if (bad_row) {
      add_row(d, t, *bad_row, 1);
      if (track) add_row(out.S, t, *bad_row, 1);
      continue;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      if (track) negate_row(out.S, t);
    }
    out.invariants.push_back(d(t, t));
    ++t;
  }
  return out;
}

}  // namespace

SmithForm snf(const IntMatrix& m) { return smith(m, true); }

std::vector<Integer> smith_invariants(const IntMatrix& m) { return smith(m, false).invariants; }

}  // namespace vcyc::linalg
