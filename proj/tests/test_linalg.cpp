#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "vcyc/cyclotomic.hpp"
#include "vcyc/normal_form.hpp"

using namespace vcyc;
using namespace vcyc::linalg;

namespace {

IntMatrix rot90() { return IntMatrix{{0, -1}, {1, 0}}; }
IntMatrix cat_map() { return IntMatrix{{2, 1}, {1, 1}}; }
IntMatrix unipotent() { return IntMatrix{{1, 1}, {0, 1}}; }

}  // namespace

TEST_CASE("matrix basics") {
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a.determinant() == -2);
  CHECK(a.trace() == 5);
  CHECK(a.rank() == 2);
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a.power(0).is_identity());
  CHECK(a.power(3) == a * a * a);
  CHECK(IntMatrix{{1, 2}, {2, 4}}.rank() == 1);
  CHECK(IntMatrix(0, 0).determinant() == 1);
  CHECK_THROWS_AS(IntMatrix(2, 3).power(2), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix(2, 3).determinant(), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix(2, 3).trace(), std::invalid_argument);
  CHECK(IntMatrix::block_diagonal(rot90(), IntMatrix{{1}}) ==
        IntMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
}

TEST_CASE("determinant matches Leibniz on random matrices") {
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.index(5);
    auto m = rng.matrix(n, n, 5);
    CHECK(m.determinant() == oracle::leibniz_det(m));
    CHECK(m.rank() == oracle::rational_rank(m));
  }
}

TEST_CASE("hnf examples") {
  SUBCASE("identity is a fixed point") {
    auto h = hnf(IntMatrix::identity(3));
    CHECK(h.H.is_identity());
    CHECK(h.U.is_identity());
  }
  SUBCASE("diag(2,3) is already in normal form") {
    IntMatrix d{{2, 0}, {0, 3}};
    auto h = hnf(d);
    CHECK(h.H == d);
    CHECK(h.U.is_identity());
  }
  SUBCASE("[[2,4],[1,3]] against exhaustive search over small U") {
    IntMatrix m{{2, 4}, {1, 3}};
    auto h = hnf(m);
    CHECK(abs(h.H.determinant()) == 2);
    CHECK(oracle::is_hnf(h.H));
    CHECK(m * h.U == h.H);
    // Every M*U in HNF over unimodular U with entries in [-6,6] is the same matrix.
    std::set<std::string> forms;
    for (const auto& u : oracle::all_unimodular_2x2(6)) {
      IntMatrix cand = oracle::multiply(m, u);
      if (oracle::is_hnf(cand)) forms.insert(cand.to_string());
    }
    REQUIRE(forms.size() == 1);
    CHECK(*forms.begin() == h.H.to_string());
  }
  SUBCASE("rank-deficient and rectangular") {
    IntMatrix m{{1, 2, 3}, {2, 4, 6}};
    auto h = hnf(m);
    CHECK(h.rank == 1);
    CHECK(oracle::is_hnf(h.H));
    CHECK(m * h.U == h.H);
    CHECK(abs(h.U.determinant()) == 1);
  }
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix{{6, 0}, {0, 4}}).invariants == std::vector<Integer>{2, 12});
  CHECK(snf(IntMatrix(3, 2)).invariants.empty());
  auto s = snf(IntMatrix{{2, 4}, {1, 3}});
  CHECK(s.invariants == std::vector<Integer>{1, 2});
  CHECK(s.S * IntMatrix{{2, 4}, {1, 3}} * s.T == s.D);
}

TEST_CASE("kernel_lattice examples") {
  CHECK(kernel_lattice(IntMatrix::identity(3)).rank() == 0);
  CHECK(kernel_lattice(IntMatrix(3, 3)) == Lattice::full(3));
  auto k = kernel_lattice(IntMatrix{{1, 1}, {0, 0}});
  REQUIRE(k.rank() == 1);
  auto v = k.basis_vector(0);
  CHECK(((v[0] == 1 && v[1] == -1) || (v[0] == -1 && v[1] == 1)));
  CHECK(k.is_saturated());
  CHECK(kernel_lattice(IntMatrix(2, 0)).rank() == 0);
}

TEST_CASE("saturate examples") {
  auto s = saturate(Lattice::span(IntMatrix{{2}, {0}}));
  CHECK(s == Lattice::span(IntMatrix{{1}, {0}}));
  auto already = kernel_lattice(IntMatrix{{1, 1}, {0, 0}});
  CHECK(saturate(already) == already);
  auto index8 = Lattice::span(IntMatrix{{2, 0}, {2, 4}});
  CHECK(index8.saturation_index() == 8);
  CHECK(!index8.is_saturated());
  CHECK(saturate(index8) == Lattice::full(2));
}

TEST_CASE("lattice membership") {
  auto l = Lattice::span(IntMatrix{{2, 0}, {2, 4}});
  CHECK(l.contains(std::vector<Integer>{2, 2}));
  CHECK(l.contains(std::vector<Integer>{0, 4}));
  CHECK(l.contains(std::vector<Integer>{2, 6}));
  CHECK_FALSE(l.contains(std::vector<Integer>{1, 0}));
  CHECK_FALSE(l.contains(std::vector<Integer>{0, 2}));
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntMatrix::identity(2)) == IntPoly{1, -2, 1});
  CHECK(char_poly(rot90()) == IntPoly{1, 0, 1});
  CHECK(char_poly(cat_map()) == IntPoly{1, -3, 1});
  CHECK(char_poly(IntMatrix(0, 0)) == IntPoly{1});
}

TEST_CASE("char_poly matches interpolation oracle and Cayley-Hamilton") {
  oracle::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.index(4);
    auto a = rng.matrix(n, n, 4);
    auto p = char_poly(a);
    CHECK(p.is_monic());
    CHECK(p.degree() == static_cast<long>(n));
    CHECK(p.coefficients() == oracle::char_poly_interpolated(a));
    CHECK(p.evaluate(a).is_zero());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(2) == IntPoly{1, 1});
  CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
  // x^12 - 1 divided by Phi_d for every proper divisor d.
  IntPoly p = IntPoly::monomial(12) - IntPoly::constant(1);
  for (std::uint64_t d : {1, 2, 3, 4, 6}) {
    auto qr = divmod_monic(p, cyclotomic_poly(d));
    CHECK(qr.remainder.is_zero());
    p = qr.quotient;
  }
  CHECK(p == cyclotomic_poly(12));
  for (std::uint64_t d = 1; d <= 60; ++d) CHECK(cyclotomic_poly(d).degree() == static_cast<long>(totient(d)));
  CHECK_THROWS(cyclotomic_poly(0));
}

TEST_CASE("cyclotomic factorization examples") {
  auto a = cyclotomic_factorization(IntPoly{1, -2, 1});
  CHECK(a.factors == std::map<std::uint64_t, std::size_t>{{1, 2}});
  CHECK(a.remainder.is_one());
  auto b = cyclotomic_factorization(IntPoly{1, -3, 1});
  CHECK(b.factors.empty());
  CHECK(b.remainder == IntPoly{1, -3, 1});
  auto c = cyclotomic_factorization(IntPoly{1, 0, 1} * IntPoly{-2, 1});
  CHECK(c.factors == std::map<std::uint64_t, std::size_t>{{4, 1}});
  CHECK(c.remainder == IntPoly{-2, 1});
  CHECK_THROWS_AS(cyclotomic_factorization(IntPoly{1, 2}), std::invalid_argument);
}

TEST_CASE("matrix_order examples") {
  CHECK(matrix_order(rot90()) == MatrixOrder::finite(4));
  CHECK(!matrix_order(unipotent()).is_finite());
  CHECK(!matrix_order(cat_map()).is_finite());
  CHECK(matrix_order(IntMatrix::identity(3)) == MatrixOrder::finite(1));
  CHECK(matrix_order(IntMatrix{{-1}}) == MatrixOrder::finite(2));
  CHECK(matrix_order(IntMatrix{{1, -1}, {1, 0}}) == MatrixOrder::finite(6));
  CHECK(matrix_order(IntMatrix{{0, -1}, {1, -1}}) == MatrixOrder::finite(3));
  // -I with a unipotent block: eigenvalues are roots of unity, order infinite.
  CHECK(!matrix_order(IntMatrix{{-1, 1}, {0, -1}}).is_finite());
  CHECK_THROWS_AS(matrix_order(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("fixed_lattice examples") {
  for (std::uint64_t k : {1, 2, 7}) CHECK(fixed_lattice(IntMatrix::identity(3), k) == Lattice::full(3));
  CHECK(fixed_lattice(unipotent(), 5) == Lattice::span(IntMatrix{{1}, {0}}));
  CHECK(fixed_lattice(rot90(), 4) == Lattice::full(2));
  CHECK(fixed_lattice(rot90(), 1).rank() == 0);
}

TEST_CASE("max_fixed_rank examples") {
  auto a = max_fixed_rank(cat_map());
  CHECK(a.k_star == 1);
  CHECK(a.rank == 0);
  auto b = max_fixed_rank(unipotent());
  CHECK(b.k_star == 1);
  CHECK(b.rank == 1);
  IntMatrix block = IntMatrix::block_diagonal(rot90(), IntMatrix{{1}});
  auto c = max_fixed_rank(block);
  CHECK(c.k_star == 4);
  CHECK(c.rank == 3);
  CHECK(c.rank == oracle::brute_max_fixed_rank(block, 120));
  CHECK_THROWS_AS(max_fixed_rank(IntMatrix{{2}}), std::invalid_argument);
}

TEST_CASE("default oracle depth") {
  CHECK(default_oracle_depth(1) == 2);
  CHECK(default_oracle_depth(2) == 12);
  CHECK(default_oracle_depth(4) == 120);
  CHECK(default_oracle_depth(12) == 2520);
}

TEST_CASE("exterior power examples") {
  IntMatrix a{{2, 3}, {5, 7}};
  CHECK(exterior_power(a, 2) == IntMatrix{{2 * 7 - 3 * 5}});
  CHECK(exterior_power(a, 1) == a);
  CHECK(exterior_power(a, 0) == IntMatrix{{1}});
  CHECK(exterior_power(IntMatrix::identity(3), 2).is_identity());
  CHECK_THROWS_AS(exterior_power(a, 3), std::invalid_argument);
  oracle::Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng.index(4);
    auto m = rng.matrix(n, n, 3);
    for (std::size_t k = 0; k <= n; ++k) CHECK(exterior_power(m, k) == oracle::exterior_power(m, k));
    CHECK(exterior_power(m, n) == IntMatrix{{m.determinant().get_si()}});
  }
}

TEST_CASE("polynomial arithmetic") {
  IntPoly p{1, 2, 3};
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Integer(2)) == 17);
  CHECK((p - p).is_zero());
  CHECK(IntPoly{}.degree() == -1);
  auto qr = divmod_monic(IntPoly{-1, 0, 0, 1}, IntPoly{-1, 1});
  CHECK(qr.quotient == IntPoly{1, 1, 1});
  CHECK(qr.remainder.is_zero());
  CHECK(IntPoly{1, -3, 1}.to_string() == "x^2 - 3x + 1");
}
