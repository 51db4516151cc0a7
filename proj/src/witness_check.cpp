#include "vcyc/witness_check.hpp"

#include "vcyc/cyclotomic.hpp"

namespace vcyc::dim {
namespace {

using namespace model;

WitnessCheck pass() { return {}; }
WitnessCheck failure(std::string why) { return {false, std::move(why)}; }

// The matrix whose fixed lattices drive the case distinction.
const IntMatrix* action_matrix(const GroupSpec& g) {
  if (const auto* z = g.as<ZnByZ>()) return &z->a;
  if (const auto* h = g.as<HeisenbergByZ>()) return &h->f_bar;
  return nullptr;
}

template <class T>
const T* payload(const Witness& w) {
  return std::get_if<T>(&w.data);
}

bool divides_all_orders(const IntMatrix& a, std::uint64_t k) {
  auto f = linalg::cyclotomic_factorization(linalg::char_poly(a));
  for (const auto& [d, mult] : f.factors)
    if (k % d != 0) return false;
  return true;
}

WitnessCheck check_center(const GroupSpec& g, const Integer& c) {
  if (const auto* f = g.as<FreeAbelian>()) {
    return c == static_cast<unsigned long>(f->n) ? pass() : failure("center rank differs from n");
  }
  if (const auto* ce = g.as<CentralExtension>()) {
    if (c != static_cast<unsigned long>(ce->m)) return failure("center rank differs from m");
    if (ce->n > 0 && linalg::kernel_lattice(stacked_forms(ce->form, ce->n)).rank() != 0)
      return failure("commutator forms have a radical, so the center is larger than Z^m");
    return pass();
  }
  if (const auto* h = g.as<HeisenbergByZ>()) {
    if (c != 1) return failure("cent(H) has rank 1");
    if (linalg::kernel_lattice(h->form).rank() != 0) return failure("form is degenerate");
    return pass();
  }
  if (const auto* p = g.as<Product>()) {
    auto a = center_rank(normalize_spec(*p->left));
    auto b = center_rank(normalize_spec(*p->right));
    if (!a || !b || *a < 1 || *b < 1) return failure("a factor has no central Z");
    if (c != static_cast<unsigned long>(*a + *b)) return failure("center rank is not the sum");
    return pass();
  }
  return failure("center witness does not apply to " + g.tag());
}

WitnessCheck check_fixed_lattice(const GroupSpec& g, CaseTag tag, const Witness& w) {
  const IntMatrix* a = action_matrix(g);
  const auto* l = payload<Lattice>(w);
  if (!a || !l || !w.exponent) return failure("fixed_lattice needs a matrix, a lattice and k");
  const std::uint64_t k = *w.exponent;
  if (k == 0) return failure("exponent must be positive");
  if (l->ambient_rank() != a->rows()) return failure("ambient rank mismatch");
  const IntMatrix ak = a->power(k);
  for (std::size_t i = 0; i < l->rank(); ++i) {
    auto v = l->basis_vector(i);
    if (ak.apply(v) != v) return failure("basis vector not fixed by A^k");
  }
  if (!l->is_saturated()) return failure("lattice is not saturated");
  const std::size_t full = a->rows() - (ak - IntMatrix::identity(a->rows())).rank();
  if (l->rank() != full) return failure("lattice is smaller than ker(A^k - I)");
  if (!divides_all_orders(*a, k)) return failure("k misses a root-of-unity eigenvalue order");
  const std::size_t r = l->rank();
  bool matches = true;
  if (g.is<ZnByZ>()) {
    if (tag == CaseTag::PolyZ_UniqueHigh) matches = r == 1;
    if (tag == CaseTag::PolyZ_Many) matches = r >= 2;
    if (tag == CaseTag::PolyZ_Empty) matches = r == 0;
  } else {
    if (tag == CaseTag::PolyZ_UniqueLow) matches = r == 0;
    if (tag == CaseTag::PolyZ_UniqueHigh) matches = r >= 1;
  }
  return matches ? pass() : failure("fixed rank does not match the case");
}

}  // namespace

WitnessCheck verify_witness(const GroupSpec& spec, CaseTag tag, const Witness& w) {
  const GroupSpec g = normalize_spec(spec);
  const IntMatrix* a = action_matrix(g);

  if (w.kind == "center") {
    const auto* c = payload<Integer>(w);
    return c ? check_center(g, *c) : failure("center witness needs an integer");
  }
  if (w.kind == "virtually_abelian_rank") {
    const auto* c = payload<Integer>(w);
    auto r = virtually_abelian_rank(g);
    if (!c || !r || *c != static_cast<unsigned long>(*r))
      return failure("virtual abelian rank mismatch");
    return pass();
  }
  if (w.kind == "finite_order") {
    const auto* k = payload<Integer>(w);
    if (!a || !k || *k < 1 || *k > 100000) return failure("finite_order needs a matrix and k >= 1");
    const auto kk = k->get_ui();
    if (!a->power(kk).is_identity()) return failure("A^k != I");
    IntMatrix p = IntMatrix::identity(a->rows());
    for (unsigned long j = 1; j < kk; ++j) {
      p = p * *a;
      if (p.is_identity()) return failure("a smaller power is already I");
    }
    return pass();
  }
  if (w.kind == "cyclotomic_free_remainder") {
    const auto* p = payload<IntPoly>(w);
    if (!a || !p) return failure("remainder witness needs a matrix and a polynomial");
    if (!(*p == linalg::char_poly(*a))) return failure("remainder differs from char_poly(A)");
    const auto deg = static_cast<std::uint64_t>(p->degree());
    for (std::uint64_t d = 1; d <= 2 * deg * deg + 2; ++d) {
      if (linalg::totient(d) > deg) continue;
      if (linalg::divmod_monic(*p, linalg::cyclotomic_poly(d)).remainder.is_zero())
        return failure("a cyclotomic polynomial divides the remainder");
    }
    return pass();
  }
  if (w.kind == "fixed_lattice") return check_fixed_lattice(g, tag, w);
  if (w.kind == "complementary_cyclic") {
    const auto* c = payload<Lattice>(w);
    if (!a || !c || c->rank() != 1 || !c->is_saturated())
      return failure("complementary_cyclic needs a primitive rank-1 lattice");
    auto mfr = linalg::max_fixed_rank(*a);
    auto joined = Lattice::span(IntMatrix::hstack(mfr.lattice.basis(), c->basis()));
    if (joined.rank() != mfr.lattice.rank() + 1 || !joined.is_saturated())
      return failure("vector does not complete the fixed lattice");
    return pass();
  }
  if (w.kind == "central_axis") {
    const auto* ce = g.as<CentralExtension>();
    const auto* c = payload<Integer>(w);
    return ce && c && ce->m == 1 && *c == 1 ? pass() : failure("central axis needs m = 1");
  }
  if (w.kind == "transversal_cyclic") {
    const auto* ce = g.as<CentralExtension>();
    const auto* c = payload<Lattice>(w);
    if (!ce || ce->m != 1 || !c || c->rank() != 1 || !c->is_saturated() ||
        c->ambient_rank() != ce->n)
      return failure("transversal_cyclic needs m = 1 and a primitive vector of Z^n");
    auto v = c->basis().transpose();
    auto centralizer = linalg::kernel_lattice(v * ce->form.front());
    if (ce->m + centralizer.rank() != ce->n) return failure("cd of the centralizer is not n");
    return pass();
  }
  if (w.kind == "fbar_not_periodic") {
    const auto* k = payload<Integer>(w);
    if (!a || !k || *k < 1) return failure("fbar_not_periodic needs a matrix and k");
    auto f = linalg::cyclotomic_factorization(linalg::char_poly(*a));
    if (!f.remainder.is_one()) return pass();
    if (!divides_all_orders(*a, k->get_ui())) return failure("k misses an eigenvalue order");
    return a->power(k->get_ui()).is_identity() ? failure("f_bar^k = I") : pass();
  }
  if (w.kind == "point_group_order") {
    const auto* cg = g.as<Crystallographic>();
    const auto* s = payload<Integer>(w);
    if (!cg || !s) return failure("point_group_order needs a crystallographic spec");
    auto closure = matrix_group_closure(cg->point_group, cg->n, kPointGroupCap);
    if (!closure || *s != static_cast<unsigned long>(closure->size()))
      return failure("point group order mismatch");
    return pass();
  }
  return failure("unknown witness kind '" + w.kind + "'");
}

}  // namespace vcyc::dim
