#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "vcyc/group_spec.hpp"

using namespace vcyc;
using namespace vcyc::model;

namespace {

IntMatrix symplectic() { return IntMatrix{{0, 1}, {-1, 0}}; }

HeisenbergByZ hei(IntMatrix f_bar, int eps = 1) { return {2, symplectic(), std::move(f_bar), eps}; }

bool has_rule(const ValidationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST_CASE("validation examples") {
  // f_{-1}: u -> u^3 v, v -> u^2 v.
  auto f_minus1 = validate_spec(hei(IntMatrix{{3, 2}, {1, 1}}));
  CHECK(f_minus1.ok());
  CHECK(validate_spec(ZnByZ{2, IntMatrix{{2, 1}, {1, 0}}}).ok());
  auto degenerate = validate_spec(CentralExtension{1, 2, {IntMatrix(2, 2)}});
  CHECK_FALSE(degenerate.ok());
  CHECK(has_rule(degenerate, "central_extension.radical"));
  CHECK(validate_spec(CentralExtension{1, 2, {symplectic()}}).ok());
}

TEST_CASE("validation rules fire individually") {
  CHECK(has_rule(validate_spec(ZnByZ{2, IntMatrix{{2, 0}, {0, 1}}}), "zn_by_z.unimodular"));
  CHECK(has_rule(validate_spec(ZnByZ{3, IntMatrix{{1, 0}, {0, 1}}}), "zn_by_z.shape"));
  CHECK(has_rule(validate_spec(ZnByZ{0, IntMatrix(0, 0)}), "zn_by_z.rank"));
  CHECK(has_rule(validate_spec(ZnByZ{13, IntMatrix::identity(13)}), "zn_by_z.size_cap"));
  CHECK(has_rule(validate_spec(Crystallographic{2, {IntMatrix{{1, 1}, {0, 1}}}}),
                 "crystallographic.finite_order"));
  CHECK(has_rule(validate_spec(Crystallographic{2, {IntMatrix{{1, 0, 0}}}}), "crystallographic.shape"));
  CHECK(has_rule(validate_spec(CentralExtension{2, 2, {symplectic()}}), "central_extension.form_count"));
  CHECK(has_rule(validate_spec(CentralExtension{1, 2, {IntMatrix{{1, 1}, {-1, 0}}}}),
                 "central_extension.alternating"));
  CHECK(has_rule(validate_spec(HeisenbergByZ{1, IntMatrix{{0}}, IntMatrix{{1}}, 1}), "heisenberg_by_z.rank"));
  CHECK(has_rule(validate_spec(hei(IntMatrix{{1, 1}, {0, 1}}, -1)), "heisenberg_by_z.compatibility"));
  CHECK(has_rule(validate_spec(hei(IntMatrix{{1, 1}, {0, 1}}, 3)), "heisenberg_by_z.epsilon"));
  CHECK(has_rule(validate_spec(hei(IntMatrix{{2, 0}, {0, 1}})), "heisenberg_by_z.unimodular"));
  CHECK(has_rule(validate_spec(HeisenbergByZ{2, IntMatrix(2, 2), IntMatrix::identity(2), 1}),
                 "heisenberg_by_z.radical"));
  CHECK(has_rule(validate_spec(ZOneOverP{Integer(4)}), "z_one_over_p.prime"));
  CHECK(has_rule(validate_spec(ZOneOverP{Integer(1)}), "z_one_over_p.prime"));
  CHECK(validate_spec(ZOneOverP{Integer(7)}).ok());
  CHECK(has_rule(validate_spec(CountableLocal{LocalKind::LocallyFinite, true, true}), "countable_local.flags"));
  CHECK(has_rule(validate_spec(CountableLocal{LocalKind::LocallyVirtuallyCyclic, false, true}),
                 "countable_local.flags"));
  CHECK(has_rule(validate_spec(GroupSpec::product(FreeAbelian{1}, ZOneOverP{Integer(2)})),
                 "product.unsupported_factor"));
  CHECK(has_rule(validate_spec(GroupSpec::product(FreeAbelian{1}, ZnByZ{2, IntMatrix{{2, 0}, {0, 1}}})),
                 "product.right:zn_by_z.unimodular"));
}

TEST_CASE("orientation-reversing epsilon") {
  // det f_bar = -1 reverses the form, so epsilon must be -1.
  IntMatrix swap{{0, 1}, {1, 0}};
  CHECK(validate_spec(hei(swap, -1)).ok());
  CHECK_FALSE(validate_spec(hei(swap, 1)).ok());
  CHECK(orientation_sign(hei(swap, -1)) == 1);
}

TEST_CASE("compatibility identity holds exactly for valid Heisenberg data") {
  for (const auto& f : oracle::all_unimodular_2x2(3)) {
    const int eps = f.determinant() == 1 ? 1 : -1;
    HeisenbergByZ h = hei(f, eps);
    REQUIRE(validate_spec(h).ok());
    CHECK(f.transpose() * symplectic() * f == Integer(eps) * symplectic());
  }
}

TEST_CASE("crystallographic closure") {
  CHECK(validate_spec(Crystallographic{2, {IntMatrix{{0, -1}, {1, 0}}}}).ok());
  auto p4 = matrix_group_closure({IntMatrix{{0, -1}, {1, 0}}}, 2, kPointGroupCap);
  REQUIRE(p4);
  CHECK(p4->size() == 4);
  auto capped = matrix_group_closure({IntMatrix{{0, -1}, {1, 0}}}, 2, 3);
  CHECK_FALSE(capped);
  // Two finite-order elements generating an infinite group.
  IntMatrix a{{-1, 0}, {0, 1}};
  IntMatrix b{{-1, 1}, {0, 1}};
  CHECK(has_rule(validate_spec(Crystallographic{2, {a, b}}), "crystallographic.closure"));
}

TEST_CASE("validation is total on malformed shapes") {
  oracle::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.index(4);
    IntMatrix m = rng.matrix(rng.index(4), rng.index(4), 2);
    CHECK_NOTHROW(validate_spec(ZnByZ{n, m}));
    CHECK_NOTHROW(validate_spec(HeisenbergByZ{n, m, m, static_cast<int>(rng.uniform(-2, 2))}));
    CHECK_NOTHROW(validate_spec(CentralExtension{rng.index(3), n, {m}}));
    CHECK_NOTHROW(validate_spec(Crystallographic{n, {m}}));
  }
}

TEST_CASE("vcd examples") {
  CHECK(vcd_of(hei(IntMatrix{{3, 2}, {1, 1}})) == 4u);
  CHECK(vcd_of(FreeAbelian{3}) == 3u);
  CHECK(vcd_of(GroupSpec::product(hei(IntMatrix{{3, 2}, {1, 1}}), hei(IntMatrix{{3, 2}, {1, 1}}))) == 8u);
  CHECK(vcd_of(ZnByZ{2, IntMatrix::identity(2)}) == 3u);
  CHECK(vcd_of(CentralExtension{3, 2, {}}) == 5u);
  CHECK(vcd_of(Crystallographic{2, {}}) == 2u);
  CHECK_FALSE(vcd_of(ZOneOverP{Integer(3)}));
  CHECK_FALSE(vcd_of(CountableLocal{}));
}

TEST_CASE("center rank examples") {
  CHECK(center_rank(FreeAbelian{2}) == 2u);
  CHECK(center_rank(ZnByZ{2, IntMatrix{{2, 1}, {1, 1}}}) == 0u);
  CHECK(center_rank(hei(IntMatrix{{3, 2}, {1, 1}})) == 1u);
  CHECK(center_rank(hei(IntMatrix{{0, 1}, {1, 0}}, -1)) == 0u);
  CHECK(center_rank(ZnByZ{2, IntMatrix{{1, 1}, {0, 1}}}) == 1u);
  // Z^2 by a rotation of order 4: t^4 is central, the translations are not.
  CHECK(center_rank(ZnByZ{2, IntMatrix{{0, -1}, {1, 0}}}) == 1u);
  CHECK(center_rank(ZnByZ{2, IntMatrix::identity(2)}) == 3u);
  CHECK(center_rank(CentralExtension{1, 2, {symplectic()}}) == 1u);
  CHECK(center_rank(Crystallographic{2, {IntMatrix{{1, 0}, {0, -1}}}}) == 1u);
  CHECK(center_rank(GroupSpec::product(FreeAbelian{1}, FreeAbelian{2})) == 3u);
  CHECK_FALSE(center_rank(ZOneOverP{Integer(2)}));
}

TEST_CASE("normalization") {
  CHECK(normalize_spec(CentralExtension{0, 3, {}}) == GroupSpec(FreeAbelian{3}));
  CHECK(validate_spec(CentralExtension{0, 3, {}}).ok());
  auto p = normalize_spec(GroupSpec::product(CentralExtension{0, 1, {}}, FreeAbelian{2}));
  CHECK(p == GroupSpec::product(FreeAbelian{1}, FreeAbelian{2}));
}

TEST_CASE("virtually abelian rank") {
  CHECK(virtually_abelian_rank(ZnByZ{2, IntMatrix{{0, -1}, {1, 0}}}) == 3u);
  CHECK(virtually_abelian_rank(ZnByZ{1, IntMatrix{{-1}}}) == 2u);
  CHECK_FALSE(virtually_abelian_rank(ZnByZ{2, IntMatrix{{1, 1}, {0, 1}}}));
  CHECK_FALSE(virtually_abelian_rank(hei(IntMatrix::identity(2))));
  CHECK(virtually_abelian_rank(Crystallographic{3, {}}) == 3u);
}
