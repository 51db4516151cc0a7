#include "vcyc/cohomology.hpp"

#include <stdexcept>

namespace vcyc::coh {
namespace {

using namespace model;

void require_unimodular(std::size_t n, const IntMatrix& a) {
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("Wang sequence: A must be " + std::to_string(n) + "x" +
                                std::to_string(n));
  Integer d = a.determinant();
  if (d != 1 && d != -1) throw std::invalid_argument("Wang sequence: |det A| must be 1");
}

// Lambda^k(A^T) - I, or the 0x0 matrix outside 0..n.
IntMatrix shifted_action(const IntMatrix& at, long k) {
  if (k < 0 || static_cast<std::size_t>(k) > at.rows()) return IntMatrix(0, 0);
  IntMatrix l = linalg::exterior_power(at, static_cast<std::size_t>(k));
  return l - IntMatrix::identity(l.rows());
}

Lattice axis(std::size_t ambient, std::size_t i) {
  std::vector<Integer> v(ambient);
  v[i] = 1;
  return Lattice::span(IntMatrix::from_columns(ambient, {v}));
}

}  // namespace

WangStage wang_stage(const IntMatrix& a, std::size_t k) {
  require_unimodular(a.rows(), a);
  const IntMatrix at = a.transpose();
  WangStage s;
  s.cokernel_part = AbelianGroup::cokernel(shifted_action(at, static_cast<long>(k) - 1));
  IntMatrix kernel_map = shifted_action(at, static_cast<long>(k));
  s.kernel_rank = linalg::kernel_lattice(kernel_map).rank();
  return s;
}

CohomologyTable wang_cohomology(std::size_t n, const IntMatrix& a) {
  require_unimodular(n, a);
  CohomologyTable t;
  for (std::size_t k = 0; k <= n + 1; ++k) {
    WangStage s = wang_stage(a, k);
    t.groups.push_back(s.cokernel_part.direct_sum(AbelianGroup::free(s.kernel_rank)));
  }
  return t;
}

AbelianGroup top_cohomology(std::size_t n, const IntMatrix& a) {
  require_unimodular(n, a);
  return a.determinant() == 1 ? AbelianGroup::free(1) : AbelianGroup::cyclic(2);
}

long euler_characteristic(const CohomologyTable& t) {
  long chi = 0;
  for (std::size_t k = 0; k < t.groups.size(); ++k) {
    long r = static_cast<long>(t.groups[k].free_rank());
    chi += k % 2 == 0 ? r : -r;
  }
  return chi;
}

MVCertificate mv_case3_certificate(const GroupSpec& spec) {
  const dim::DimReport r = dim::compute_report(spec);
  if (r.tag != dim::CaseTag::PolyZ_Many)
    throw dim::SpecError("mv_case3_certificate: case is " + dim::to_string(r.tag) +
                         ", not PolyZ_Many");
  const GroupSpec g = normalize_spec(spec);
  MVCertificate c;
  c.degree = *r.vcd;
  c.source_group = orientation_sign(g) > 0 ? AbelianGroup::free(1) : AbelianGroup::cyclic(2);
  c.conclusion = "nonvanishing in degree " + std::to_string(c.degree + 1);

  if (const auto* z = g.as<ZnByZ>(); z && r.witnesses.front().kind == "fixed_lattice") {
    const auto& l = std::get<Lattice>(r.witnesses.front().data);
    c.ambient = "fixed lattice in Z^" + std::to_string(z->n);
    for (std::size_t i = 0; i < 2; ++i)
      c.classes.push_back(Lattice::span(IntMatrix::from_columns(z->n, {l.basis_vector(i)})));
  } else if (g.is<ZnByZ>()) {
    const auto& z = *g.as<ZnByZ>();
    c.ambient = "Z^" + std::to_string(z.n) + " x Z (finite-index free abelian subgroup)";
    c.classes = {axis(z.n + 1, 0), axis(z.n + 1, z.n)};
  } else if (const auto* h = g.as<HeisenbergByZ>()) {
    (void)h;
    c.ambient = "<z, t^l> (center of H x <t^l>)";
    c.classes = {axis(2, 0), axis(2, 1)};
  } else if (const auto* ce = g.as<CentralExtension>()) {
    c.ambient = "central Z^" + std::to_string(ce->m);
    c.classes = {axis(ce->m, 0), axis(ce->m, 1)};
  } else if (const auto* f = g.as<FreeAbelian>()) {
    c.ambient = "Z^" + std::to_string(f->n);
    c.classes = {axis(f->n, 0), axis(f->n, 1)};
  } else if (const auto* cr = g.as<Crystallographic>()) {
    c.ambient = "translation lattice Z^" + std::to_string(cr->n);
    c.classes = {axis(cr->n, 0), axis(cr->n, 1)};
  } else {
    // Products (and virtually abelian products): one central axis per factor
    // or two axes of the finite-index free abelian subgroup.
    c.ambient = "central Z^2 (one axis from each factor)";
    c.classes = {axis(2, 0), axis(2, 1)};
  }
  c.target_count = c.classes.size();
  return c;
}

bool certificate_holds(const MVCertificate& c) {
  if (!c.source_group.is_cyclic() || c.target_count < 2 || c.classes.size() < 2) return false;
  for (const auto& l : c.classes)
    if (l.rank() != 1 || !l.is_saturated()) return false;
  if (c.classes[0].ambient_rank() != c.classes[1].ambient_rank()) return false;
  auto joined = IntMatrix::hstack(c.classes[0].basis(), c.classes[1].basis());
  return joined.rank() == 2;
}

}  // namespace vcyc::coh
