#include "vcyc/dim_engine.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "vcyc/cyclotomic.hpp"
#include "vcyc/normal_form.hpp"

namespace vcyc::dim {
namespace {

using namespace model;

constexpr std::array<std::pair<CaseTag, const char*>, 12> kTagNames{{
    {CaseTag::PolyZ_Empty, "PolyZ_Empty"},
    {CaseTag::PolyZ_UniqueLow, "PolyZ_UniqueLow"},
    {CaseTag::PolyZ_UniqueHigh, "PolyZ_UniqueHigh"},
    {CaseTag::PolyZ_Many, "PolyZ_Many"},
    {CaseTag::VirtuallyZn, "VirtuallyZn"},
    {CaseTag::LowDim_LocallyFinite, "LowDim_LocallyFinite"},
    {CaseTag::LowDim_LocallyVC, "LowDim_LocallyVC"},
    {CaseTag::LowDim_VC, "LowDim_VC"},
    {CaseTag::LowDim_General, "LowDim_General"},
    {CaseTag::ZOneOverP, "ZOneOverP"},
    {CaseTag::ProductExact, "ProductExact"},
    {CaseTag::ProductBounds, "ProductBounds"},
}};

Witness make(std::string kind, WitnessPayload data, std::string citation,
             std::optional<std::uint64_t> exponent = std::nullopt) {
  return Witness{std::move(kind), std::move(data), exponent, std::move(citation)};
}

Integer integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

struct Partial {
  std::size_t hdim_vcyc;
  CaseTag tag;
  std::vector<Witness> witnesses;
  std::vector<std::string> citations;
};

// Values for Z^n (also used for anything containing Z^n with finite index).
Partial virtually_free_abelian(std::size_t n, std::vector<Witness> witnesses,
                               std::vector<std::string> citations) {
  citations.insert(citations.begin(), "virtually-zn");
  if (n <= 1) return {0, CaseTag::VirtuallyZn, std::move(witnesses), std::move(citations)};
  citations.push_back("polyz.case3");
  return {n + 1, CaseTag::PolyZ_Many, std::move(witnesses), std::move(citations)};
}

Partial dispatch(const FreeAbelian& g) {
  return virtually_free_abelian(g.n, {make("center", integer(g.n), "virtually-zn")}, {});
}

Partial dispatch(const ZnByZ& g) {
  const std::size_t n = g.n;
  const auto order = linalg::matrix_order(g.a);
  if (n == 1 || order.is_finite()) {
    std::vector<Witness> w{
        make("finite_order", Integer(static_cast<unsigned long>(order.value())), "zn-by-z.periodic")};
    return virtually_free_abelian(n + 1, std::move(w), {"zn-by-z.periodic"});
  }
  const auto mfr = linalg::max_fixed_rank(g.a);
  if (mfr.rank == 0) {
    auto remainder = linalg::cyclotomic_factorization(linalg::char_poly(g.a)).remainder;
    return {n + 1,
            CaseTag::PolyZ_Empty,
            {make("cyclotomic_free_remainder", remainder, "polyz.case1")},
            {"zn-by-z.dichotomy.case1", "polyz.case1"}};
  }
  if (mfr.rank == 1) {
    Lattice comp = Lattice::span(IntMatrix::from_columns(n, {complementary_vector(mfr.lattice)}));
    return {n + 1,
            CaseTag::PolyZ_UniqueHigh,
            {make("fixed_lattice", mfr.lattice, "zn-by-z.dichotomy.case1", mfr.k_star),
             make("complementary_cyclic", comp, "polyz.case2b")},
            {"zn-by-z.dichotomy.case1", "polyz.case2b"}};
  }
  return {n + 2,
          CaseTag::PolyZ_Many,
          {make("fixed_lattice", mfr.lattice, "zn-by-z.dichotomy.case2", mfr.k_star)},
          {"zn-by-z.dichotomy.case2", "polyz.case3"}};
}

Partial dispatch(const Crystallographic& g) {
  auto closure = matrix_group_closure(g.point_group, g.n, kPointGroupCap);
  std::vector<Witness> w{make("point_group_order", integer(closure ? closure->size() : 0),
                              "virtually-zn")};
  return virtually_free_abelian(g.n, std::move(w), {});
}

Partial dispatch(const CentralExtension& g) {
  if (g.m + g.n <= 1) return virtually_free_abelian(g.m + g.n, {}, {});
  if (g.n == 0) {
    return virtually_free_abelian(g.m, {make("center", integer(g.m), "central-extension")},
                                  {"central-extension"});
  }
  if (g.m == 1) {
    std::vector<Integer> v(g.n);
    v[0] = 1;
    return {g.n + 1,
            CaseTag::PolyZ_UniqueHigh,
            {make("central_axis", integer(1), "central-extension"),
             make("transversal_cyclic", Lattice::span(IntMatrix::from_columns(g.n, {v})),
                  "polyz.case2b")},
            {"central-extension", "polyz.case2b"}};
  }
  return {g.m + g.n + 1,
          CaseTag::PolyZ_Many,
          {make("center", integer(g.m), "central-extension")},
          {"central-extension", "polyz.case3"}};
}

Partial dispatch(const HeisenbergByZ& g) {
  const std::size_t n = g.n;
  Witness center = make("center", integer(1), "heisenberg-by-z.case1");
  const auto order = linalg::matrix_order(g.f_bar);
  if (order.is_finite()) {
    center.citation = "heisenberg-by-z.case3";
    return {n + 3,
            CaseTag::PolyZ_Many,
            {center, make("finite_order", Integer(static_cast<unsigned long>(order.value())),
                          "heisenberg-by-z.case3")},
            {"heisenberg-by-z.case3", "polyz.case3"}};
  }
  const auto mfr = linalg::max_fixed_rank(g.f_bar);
  if (mfr.rank == 0) {
    return {n + 1,
            CaseTag::PolyZ_UniqueLow,
            {center, make("fixed_lattice", mfr.lattice, "heisenberg-by-z.case1", mfr.k_star)},
            {"heisenberg-by-z.case1", "polyz.case2a"}};
  }
  center.citation = "heisenberg-by-z.case2";
  return {n + 2,
          CaseTag::PolyZ_UniqueHigh,
          {center, make("fixed_lattice", mfr.lattice, "heisenberg-by-z.case2", mfr.k_star),
           make("fbar_not_periodic", Integer(static_cast<unsigned long>(mfr.k_star)),
                "heisenberg-by-z.case2")},
          {"heisenberg-by-z.case2", "polyz.case2b"}};
}

void require_valid(const GroupSpec& g) {
  auto report = validate_spec(g);
  if (!report.ok()) {
    std::string msg = "invalid group spec: " + report.violations.front().rule + ": " +
                      report.violations.front().message;
    throw SpecError(msg, report.violations);
  }
}

DimReport single(const GroupSpec& g) {
  DimReport r;
  r.spec = g;
  if (const auto* z = g.as<model::ZOneOverP>()) {
    (void)z;
    r.hdim_fin = 2;
    r.hdim_vcyc = DimRange::exact(1);
    r.tag = CaseTag::ZOneOverP;
    r.citations = {"z-one-over-p"};
    return r;
  }
  if (const auto* c = g.as<CountableLocal>()) {
    auto v = low_dim_table(*c);
    r.hdim_fin = v.hdim_fin;
    r.hdim_vcyc = DimRange::exact(v.hdim_vcyc);
    r.tag = v.tag;
    switch (c->kind) {
      case LocalKind::LocallyFinite:
        r.citations = {"low-dim.locally-finite"};
        break;
      case LocalKind::LocallyVirtuallyCyclic:
        r.citations = {"low-dim.locally-vc"};
        break;
      case LocalKind::ProperDimAtMostOne:
        r.citations = {"low-dim.proper-dim-one"};
        break;
    }
    return r;
  }
  Partial p = std::visit(
      [](const auto& v) -> Partial {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Product> || std::is_same_v<T, model::ZOneOverP> ||
                      std::is_same_v<T, CountableLocal>) {
          throw SpecError("internal dispatch error");
        } else {
          return dispatch(v);
        }
      },
      g.value());
  r.vcd = vcd_of(g);
  r.hdim_fin = *r.vcd;
  r.hdim_vcyc = DimRange::exact(p.hdim_vcyc);
  r.tag = p.tag;
  r.witnesses = std::move(p.witnesses);
  r.citations = std::move(p.citations);
  return r;
}

DimReport compute_normalized(const GroupSpec& g) {
  if (const auto* p = g.as<Product>()) {
    DimReport a = compute_normalized(*p->left);
    DimReport b = compute_normalized(*p->right);
    DimReport out = product_dims(a, b);
    return out;
  }
  return single(g);
}

}  // namespace

std::string to_string(CaseTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  return "unknown";
}

std::optional<CaseTag> case_tag_from_string(const std::string& s) {
  for (const auto& [t, name] : kTagNames)
    if (s == name) return t;
  return std::nullopt;
}

std::optional<int> case_offset(CaseTag tag) {
  switch (tag) {
    case CaseTag::PolyZ_Empty:
      return 0;
    case CaseTag::PolyZ_UniqueLow:
      return -1;
    case CaseTag::PolyZ_UniqueHigh:
      return 0;
    case CaseTag::PolyZ_Many:
      return 1;
    default:
      return std::nullopt;
  }
}

std::vector<Integer> complementary_vector(const Lattice& l) {
  if (l.rank() >= l.ambient_rank())
    throw std::invalid_argument("complementary_vector: lattice already has full rank");
  // With L saturated, S * basis * T = [I; 0], so the columns of S^-1 past
  // rank(L) extend the basis of L to one of Z^n.
  auto smith = linalg::snf(l.basis());
  auto inverse = linalg::hnf(smith.S).U;
  return inverse.column(l.rank());
}

LowDimValues low_dim_table(const CountableLocal& g) {
  auto report = validate_spec(GroupSpec(g));
  if (!report.ok()) throw SpecError(report.violations.front().message, report.violations);
  switch (g.kind) {
    case LocalKind::LocallyFinite:
      if (!g.infinite) return {0, 0, CaseTag::LowDim_VC};
      return {1, 1, CaseTag::LowDim_LocallyFinite};
    case LocalKind::LocallyVirtuallyCyclic:
      if (g.virtually_cyclic) return {1, 0, CaseTag::LowDim_VC};
      return {2, 1, CaseTag::LowDim_LocallyVC};
    case LocalKind::ProperDimAtMostOne:
      return {1, 2, CaseTag::LowDim_General};
  }
  throw SpecError("unknown countable-local kind");
}

DimReport compute_report(const GroupSpec& g) {
  require_valid(g);
  DimReport r = compute_normalized(normalize_spec(g));
  r.spec = g;
  return r;
}

std::size_t hdim_fin(const GroupSpec& g) { return compute_report(g).hdim_fin; }

DimRange hdim_vcyc(const GroupSpec& g) { return compute_report(g).hdim_vcyc; }

CaseResult classify_case(const GroupSpec& g) {
  if (!is_virtually_poly_z(g))
    throw SpecError("classify_case: '" + g.tag() + "' is not virtually poly-Z");
  DimReport r = compute_report(g);
  return {r.tag, r.witnesses};
}

DimReport product_dims(const DimReport& a, const DimReport& b) {
  if (!a.vcd || !b.vcd || !is_virtually_poly_z(a.spec) || !is_virtually_poly_z(b.spec))
    throw SpecError("product_dims: both factors must be virtually poly-Z");
  if (!a.hdim_vcyc.is_exact() || !b.hdim_vcyc.is_exact())
    throw SpecError("product_dims: both factor reports must be exact");

  const GroupSpec spec = GroupSpec::product(a.spec, b.spec);
  const std::size_t vcd = *a.vcd + *b.vcd;

  // The trivial group is a unit for the product.
  if (*a.vcd == 0 || *b.vcd == 0) {
    DimReport r = *a.vcd == 0 ? b : a;
    r.spec = spec;
    return r;
  }

  DimReport r;
  r.spec = spec;
  r.vcd = vcd;
  r.hdim_fin = vcd;

  auto ra = virtually_abelian_rank(normalize_spec(a.spec));
  auto rb = virtually_abelian_rank(normalize_spec(b.spec));
  if (ra && rb) {
    Partial p = virtually_free_abelian(
        *ra + *rb,
        {make("virtually_abelian_rank", integer(*ra + *rb), "product.virtually-abelian")},
        {"product.virtually-abelian"});
    r.hdim_vcyc = DimRange::exact(p.hdim_vcyc);
    r.tag = p.tag;
    r.witnesses = std::move(p.witnesses);
    r.citations = std::move(p.citations);
    return r;
  }

  auto ca = center_rank(normalize_spec(a.spec));
  auto cb = center_rank(normalize_spec(b.spec));
  if (ca && cb && *ca >= 1 && *cb >= 1) {
    r.hdim_vcyc = DimRange::exact(vcd + 1);
    r.tag = CaseTag::PolyZ_Many;
    r.witnesses = {make("center", integer(*ca + *cb), "product.central-z2")};
    r.citations = {"product.central-z2", "polyz.case3"};
    return r;
  }

  const std::size_t lo = std::max({vcd - 1, a.hdim_vcyc.lo, b.hdim_vcyc.lo});
  const std::size_t hi = std::min(vcd + 1, a.hdim_vcyc.hi + b.hdim_vcyc.hi + 3);
  r.hdim_vcyc = {lo, hi};
  r.tag = lo == hi ? CaseTag::ProductExact : CaseTag::ProductBounds;
  r.citations = {"sandwich.lower", "polyz.bounds", "subgroup.monotone", "product.plus-three"};
  return r;
}

}  // namespace vcyc::dim
