#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "vcyc/cohomology.hpp"
#include "vcyc/cyclotomic.hpp"
#include "vcyc/dim_engine.hpp"
#include "vcyc/int_poly.hpp"
#include "vcyc/lattice.hpp"
#include "vcyc/normal_form.hpp"

using namespace vcyc;
using namespace vcyc::linalg;

namespace {

constexpr int kRandomMatrices = 600;

// Mixed sources: small-entry rejection sampling and long elementary words.
IntMatrix random_unimodular(oracle::Rng& rng, std::size_t n) {
  return rng.uniform(0, 2) == 0 ? rng.elementary_word(n, 12) : rng.unimodular(n, 2);
}

std::vector<Integer> abs_all(std::vector<Integer> v) {
  for (auto& x : v) x = abs(x);
  return v;
}

}  // namespace

TEST_CASE("max_fixed_rank agrees with brute force up to k = 120") {
  oracle::Rng rng(20240501);
  for (int i = 0; i < kRandomMatrices; ++i) {
    const std::size_t n = 1 + rng.index(4);
    IntMatrix a = random_unimodular(rng, n);
    INFO(a.to_string());
    auto mfr = max_fixed_rank(a);
    CHECK(mfr.rank == oracle::brute_max_fixed_rank(a, 120));
    CHECK(mfr.lattice.rank() == mfr.rank);
    CHECK(mfr.lattice.is_saturated());
    CHECK(mfr.lattice.is_invariant_under(a));
  }
}

TEST_CASE("matrix_order agrees with direct powering") {
  oracle::Rng rng(77);
  for (int i = 0; i < kRandomMatrices; ++i) {
    const std::size_t n = 1 + rng.index(4);
    IntMatrix a = random_unimodular(rng, n);
    INFO(a.to_string());
    auto order = matrix_order(a);
    auto brute = oracle::brute_order(a, 120);
    CHECK(order.is_finite() == brute.has_value());
    if (brute) CHECK(order.value() == *brute);
  }
}

TEST_CASE("sandwich and case offset over random Z^n by Z") {
  oracle::Rng rng(4242);
  for (int i = 0; i < kRandomMatrices; ++i) {
    const std::size_t n = 1 + rng.index(4);
    IntMatrix a = random_unimodular(rng, n);
    INFO(a.to_string());
    dim::DimReport r = dim::compute_report(model::ZnByZ{n, a});
    REQUIRE(r.vcd);
    const long vcd = static_cast<long>(*r.vcd);
    REQUIRE(r.hdim_vcyc.is_exact());
    const long h = static_cast<long>(r.hdim_vcyc.lo);
    CHECK(vcd - 1 <= h);
    CHECK(h <= vcd + 1);
    auto offset = dim::case_offset(r.tag);
    REQUIRE(offset);
    CHECK(h == vcd + *offset);
    // Independent expectation from the brute-force oracle.
    const bool periodic = oracle::brute_order(a, 120).has_value();
    const std::size_t fixed = oracle::brute_max_fixed_rank(a, 120);
    const long expected = (periodic || fixed >= 2) ? vcd + 1 : vcd;
    CHECK(h == expected);
  }
}

TEST_CASE("sandwich over random Heisenberg-by-Z") {
  const IntMatrix j{{0, 1}, {-1, 0}};
  oracle::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    IntMatrix f = random_unimodular(rng, 2);
    const int eps = oracle::leibniz_det(f) == 1 ? 1 : -1;
    dim::DimReport r = dim::compute_report(model::HeisenbergByZ{2, j, f, eps});
    const long vcd = static_cast<long>(*r.vcd);
    const long h = static_cast<long>(r.hdim_vcyc.lo);
    CHECK(vcd == 4);
    CHECK(vcd - 1 <= h);
    CHECK(h <= vcd + 1);
    CHECK(h == vcd + *dim::case_offset(r.tag));
  }
}

TEST_CASE("HNF identities") {
  oracle::Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = 1 + rng.index(4), cols = 1 + rng.index(4);
    IntMatrix m = rng.matrix(rows, cols, 6);
    auto h = hnf(m);
    CHECK(oracle::multiply(m, h.U) == h.H);
    CHECK(abs(oracle::leibniz_det(h.U)) == 1);
    CHECK(oracle::is_hnf(h.H));
    CHECK(h.rank == oracle::rational_rank(m));
    CHECK(hnf(h.H).H == h.H);
  }
}

TEST_CASE("SNF identities") {
  oracle::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = 1 + rng.index(4), cols = 1 + rng.index(4);
    IntMatrix m = rng.matrix(rows, cols, 6);
    auto s = snf(m);
    CHECK(oracle::multiply(oracle::multiply(s.S, m), s.T) == s.D);
    CHECK(abs(oracle::leibniz_det(s.S)) == 1);
    CHECK(abs(oracle::leibniz_det(s.T)) == 1);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (r != c) CHECK(s.D(r, c) == 0);
    for (std::size_t k = 1; k < s.invariants.size(); ++k) CHECK(s.invariants[k] % s.invariants[k - 1] == 0);
    CHECK(abs_all(s.invariants) == oracle::determinantal_invariants(m));
    CHECK(abs_all(smith_invariants(m)) == oracle::determinantal_invariants(m));
  }
}

TEST_CASE("fixed lattices grow along divisibility") {
  oracle::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.index(4);
    IntMatrix a = random_unimodular(rng, n);
    const std::uint64_t k = 1 + rng.index(6);
    const std::uint64_t mult = 1 + rng.index(4);
    Lattice small = fixed_lattice(a, k);
    Lattice big = fixed_lattice(a, k * mult);
    CHECK(is_sublattice(small, big));
    CHECK(small.is_saturated());
    for (std::size_t c = 0; c < small.rank(); ++c) {
      auto v = small.basis_vector(c);
      CHECK(oracle::multiply(a.power(k), small.basis().columns(c, 1)) == small.basis().columns(c, 1));
      CHECK(big.contains(v));
    }
  }
}

TEST_CASE("cyclotomic factorization reassembles the characteristic polynomial") {
  oracle::Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.index(5);
    IntMatrix a = random_unimodular(rng, n);
    IntPoly chi = char_poly(a);
    CHECK(chi.coefficients() == oracle::char_poly_interpolated(a));
    auto f = cyclotomic_factorization(chi);
    IntPoly product = f.remainder;
    for (const auto& [d, mult] : f.factors)
      for (std::size_t e = 0; e < mult; ++e) product = product * cyclotomic_poly(d);
    CHECK(product == chi);
    for (std::uint64_t d = 1; d <= 30; ++d)
      if (totient(d) <= static_cast<std::uint64_t>(f.remainder.degree()))
        CHECK_FALSE(divmod_monic(f.remainder, cyclotomic_poly(d)).remainder.is_zero());
  }
}

TEST_CASE("Cayley-Hamilton") {
  oracle::Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.index(5);
    IntMatrix a = rng.matrix(n, n, 5);
    CHECK(char_poly(a).evaluate(a).is_zero());
  }
}

TEST_CASE("exterior powers are multiplicative") {
  oracle::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.index(4);
    IntMatrix a = rng.matrix(n, n, 3), b = rng.matrix(n, n, 3);
    const std::size_t k = rng.index(n + 1);
    CHECK(exterior_power(a * b, k) == exterior_power(a, k) * exterior_power(b, k));
    CHECK(exterior_power(a, k) == oracle::exterior_power(a, k));
    if (k == n) CHECK(exterior_power(a, k)(0, 0) == oracle::leibniz_det(a));
  }
}

TEST_CASE("Wang tables have Euler characteristic zero") {
  oracle::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.index(4);
    IntMatrix a = random_unimodular(rng, n);
    auto t = coh::wang_cohomology(n, a);
    CHECK(coh::euler_characteristic(t) == 0);
    CHECK(t.groups.size() == n + 2);
  }
}

TEST_CASE("lattice saturation and kernels") {
  oracle::Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = 1 + rng.index(4), cols = 1 + rng.index(4);
    IntMatrix m = rng.matrix(rows, cols, 5);
    Lattice k = kernel_lattice(m);
    CHECK(k.rank() == cols - oracle::rational_rank(m));
    CHECK(k.is_saturated());
    CHECK(oracle::multiply(m, k.basis()).is_zero());
    Lattice l = Lattice::span(m);
    Lattice s = saturate(l);
    CHECK(is_sublattice(l, s));
    CHECK(s.rank() == l.rank());
    CHECK(s.is_saturated());
  }
}
