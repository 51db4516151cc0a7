#include "vcyc/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vcyc/witness_check.hpp"

namespace vcyc::cli {
namespace {

using linalg::IntMatrix;
using model::GroupSpec;

struct NamedMatrix {
  std::string label;
  IntMatrix m;
};

void collect_matrices(const GroupSpec& g, const std::string& prefix, std::vector<NamedMatrix>& out) {
  if (const auto* z = g.as<model::ZnByZ>()) out.push_back({prefix + "A", z->a});
  if (const auto* h = g.as<model::HeisenbergByZ>()) out.push_back({prefix + "f_bar", h->f_bar});
  if (const auto* c = g.as<model::Crystallographic>())
    for (std::size_t i = 0; i < c->point_group.size(); ++i)
      out.push_back({prefix + "point_group[" + std::to_string(i) + "]", c->point_group[i]});
  if (const auto* p = g.as<model::Product>()) {
    collect_matrices(*p->left, prefix + "left.", out);
    collect_matrices(*p->right, prefix + "right.", out);
  }
}

std::string range_text(const dim::DimRange& r) {
  if (r.is_exact()) return std::to_string(r.lo);
  return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

class Verifier {
 public:
  Verifier(std::uint64_t depth, const Engine& engine) : depth_(depth), engine_(engine) {}

  void entry(const io::NamedSpec& ns) {
    name_ = ns.name;
    std::vector<NamedMatrix> mats;
    collect_matrices(ns.spec, "", mats);
    for (const auto& m : mats) {
      check_fixed_rank(m);
      check_order(m);
    }
    const GroupSpec g = model::normalize_spec(ns.spec);
    dim::DimReport r;
    try {
      r = engine_.compute(ns.spec);
    } catch (const std::exception& e) {
      fail("compute", e.what());
      return;
    }
    check_sandwich(ns.spec, r);
    for (const auto& w : r.witnesses) {
      ++out.checks;
      auto res = dim::verify_witness(ns.spec, r.tag, w);
      if (!res.ok) fail("witness " + w.kind, res.reason);
    }
    check_dual(g, r);
    if (const auto* z = g.as<model::ZnByZ>()) check_cohomology(*z);
    if (r.tag == dim::CaseTag::PolyZ_Many) {
      ++out.checks;
      try {
        if (!coh::certificate_holds(coh::mv_case3_certificate(ns.spec)))
          fail("mv_certificate", "certificate does not establish non-surjectivity");
      } catch (const std::exception& e) {
        fail("mv_certificate", e.what());
      }
    }
  }

  VerifyOutcome out;

 private:
  void fail(const std::string& check, const std::string& what) {
    out.discrepancies.push_back(name_ + ": " + check + ": " + what);
  }
  void warn(const std::string& check, const std::string& what) {
    out.warnings.push_back(name_ + ": " + check + ": " + what);
  }

  // Brute force: rank ker(M^k - I) = n - rank_Q(M^k - I) for k = 1..depth.
  void check_fixed_rank(const NamedMatrix& nm) {
    ++out.checks;
    const std::size_t n = nm.m.rows();
    const IntMatrix id = IntMatrix::identity(n);
    const auto claimed = engine_.max_fixed_rank(nm.m);
    std::size_t brute = 0;
    IntMatrix p = id;
    for (std::uint64_t k = 1; k <= depth_ && brute < n; ++k) {
      p = p * nm.m;
      brute = std::max(brute, n - (p - id).rank());
    }
    const std::size_t direct = n - (nm.m.power(claimed.k_star) - id).rank();
    const std::string label = "max_fixed_rank(" + nm.label + ")";
    if (direct != claimed.rank) {
      fail(label, "claimed rank " + std::to_string(claimed.rank) + " but ker(A^" +
                      std::to_string(claimed.k_star) + " - I) has rank " + std::to_string(direct));
    } else if (brute > claimed.rank) {
      fail(label, "brute force found rank " + std::to_string(brute) + " > claimed " +
                      std::to_string(claimed.rank));
    } else if (brute < claimed.rank) {
      if (claimed.k_star > depth_)
        warn(label, "oracle depth " + std::to_string(depth_) + " is below k* = " +
                        std::to_string(claimed.k_star) + "; brute force inconclusive");
      else
        fail(label, "brute force up to " + std::to_string(depth_) + " found rank " +
                        std::to_string(brute) + " < claimed " + std::to_string(claimed.rank));
    }
  }

  void check_order(const NamedMatrix& nm) {
    ++out.checks;
    const auto claimed = engine_.matrix_order(nm.m);
    std::optional<std::uint64_t> found;
    IntMatrix p = IntMatrix::identity(nm.m.rows());
    for (std::uint64_t k = 1; k <= depth_; ++k) {
      p = p * nm.m;
      if (p.is_identity()) {
        found = k;
        break;
      }
    }
    const std::string label = "matrix_order(" + nm.label + ")";
    if (found) {
      if (!claimed.is_finite() || claimed.value() != *found)
        fail(label, "direct powering gives order " + std::to_string(*found));
    } else if (claimed.is_finite()) {
      if (claimed.value() <= depth_)
        fail(label, "claimed order " + std::to_string(claimed.value()) + " but A^k != I for k <= " +
                        std::to_string(depth_));
      else if (!nm.m.power(claimed.value()).is_identity())
        fail(label, "claimed order " + std::to_string(claimed.value()) + " but A^k != I");
      else
        warn(label, "order " + std::to_string(claimed.value()) + " exceeds oracle depth " +
                        std::to_string(depth_));
    }
  }

  void check_sandwich(const GroupSpec& g, const dim::DimReport& r) {
    if (!model::is_virtually_poly_z(g)) return;
    ++out.checks;
    const auto vcd = model::vcd_of(g);
    if (!vcd || r.vcd != vcd) {
      fail("vcd", "reported vcd does not match the Hirsch length");
      return;
    }
    if (r.hdim_fin != *vcd) fail("hdim_fin", "hdim_fin != vcd");
    const long v = static_cast<long>(*vcd);
    const long lo = static_cast<long>(r.hdim_vcyc.lo);
    const long hi = static_cast<long>(r.hdim_vcyc.hi);
    if (lo > hi || lo < v - 1 || hi > v + 1)
      fail("sandwich", "hdim_vcyc " + range_text(r.hdim_vcyc) + " outside [vcd-1, vcd+1] with vcd " +
                           std::to_string(v));
    if (auto off = dim::case_offset(r.tag)) {
      if (!r.hdim_vcyc.is_exact() || lo - v != *off)
        fail("case offset", dim::to_string(r.tag) + " requires hdim_vcyc = vcd + " +
                                std::to_string(*off) + ", got " + range_text(r.hdim_vcyc));
    }
  }

  void compare(const std::string& what, const dim::DimReport& a, const dim::DimReport& b) {
    ++out.checks;
    if (a.vcd != b.vcd || a.hdim_fin != b.hdim_fin || a.hdim_vcyc != b.hdim_vcyc || a.tag != b.tag)
      fail(what, "values differ: (" + std::to_string(a.hdim_fin) + ", " + range_text(a.hdim_vcyc) +
                     ", " + dim::to_string(a.tag) + ") vs (" + std::to_string(b.hdim_fin) + ", " +
                     range_text(b.hdim_vcyc) + ", " + dim::to_string(b.tag) + ")");
  }

  // The Heisenberg group with commutator d*z, written both ways.
  void check_dual(const GroupSpec& g, const dim::DimReport& r) {
    std::optional<Integer> d;
    if (const auto* ce = g.as<model::CentralExtension>(); ce && ce->m == 1 && ce->n == 2)
      d = ce->form.front()(0, 1);
    if (const auto* z = g.as<model::ZnByZ>(); z && z->n == 2) {
      const auto& a = z->a;
      if (a(0, 0) == 1 && a(1, 0) == 0 && a(1, 1) == 1 && a(0, 1) != 0) d = a(0, 1);
    }
    if (d) {
      IntMatrix form(2, 2);
      form(0, 1) = *d;
      form(1, 0) = -*d;
      IntMatrix unip = IntMatrix::identity(2);
      unip(0, 1) = *d;
      const GroupSpec other = g.is<model::ZnByZ>()
                                  ? GroupSpec(model::CentralExtension{1, 2, {form}})
                                  : GroupSpec(model::ZnByZ{2, unip});
      try {
        compare("dual representation", r, engine_.compute(other));
      } catch (const std::exception& e) {
        fail("dual representation", e.what());
      }
    }
    if (const auto* z = g.as<model::ZnByZ>(); z && engine_.matrix_order(z->a).is_finite()) {
      try {
        compare("virtually Z^(n+1)", r, engine_.compute(model::FreeAbelian{z->n + 1}));
      } catch (const std::exception& e) {
        fail("virtually Z^(n+1)", e.what());
      }
    }
  }

  void check_cohomology(const model::ZnByZ& z) {
    ++out.checks;
    const auto table = coh::wang_cohomology(z.n, z.a);
    const auto top = engine_.top_cohomology(z.n, z.a);
    if (!(top == table.groups.back()))
      fail("top_cohomology", top.to_string() + " but the Wang sequence gives " +
                                  table.groups.back().to_string());
    const bool det_plus = z.a.determinant() == 1;
    if ((top == AbelianGroup::free(1)) != det_plus)
      fail("top_cohomology", "top class must be Z exactly when det A = +1");
    if (coh::euler_characteristic(table) != 0) fail("euler_characteristic", "nonzero");
    if (!(table.groups.front() == AbelianGroup::free(1))) fail("H^0", "H^0 != Z");
  }

  std::uint64_t depth_;
  const Engine& engine_;
  std::string name_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::uint64_t> env_depth() {
  const char* v = std::getenv("VCYC_ORACLE_DEPTH");
  if (!v || !*v) return std::nullopt;
  try {
    Integer k = parse_integer(v);
    if (k < 1 || !k.fits_ulong_p()) throw std::invalid_argument("range");
    return k.get_ui();
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("VCYC_ORACLE_DEPTH must be a positive integer, got '") + v + "'");
  }
}

void print_diagnostics(const io::SpecDocument& doc, std::ostream& err) {
  for (const auto& d : doc.diagnostics)
    err << "invalid entry '" << d.name << "': " << d.rule << ": " << d.message << "\n";
}

}  // namespace

std::uint64_t default_depth_for(const io::SpecDocument& doc) {
  if (auto e = env_depth()) return *e;
  std::size_t n = 0;
  for (const auto& g : doc.groups)
    if (g.valid()) n = std::max(n, model::max_matrix_size(g.spec));
  return linalg::default_oracle_depth(n);
}

io::ReportDocument cmd_compute(const io::SpecDocument& doc, std::uint64_t oracle_depth) {
  io::ReportDocument out;
  out.oracle_depth = oracle_depth;
  out.diagnostics = doc.diagnostics;
  for (const auto& ns : doc.groups) {
    if (!ns.valid()) continue;
    try {
      io::ReportEntry e;
      e.name = ns.name;
      e.report = dim::compute_report(ns.spec);
      const GroupSpec g = model::normalize_spec(ns.spec);
      if (const auto* z = g.as<model::ZnByZ>()) e.cohomology = coh::wang_cohomology(z->n, z->a);
      if (e.report.tag == dim::CaseTag::PolyZ_Many) e.mv_certificate = coh::mv_case3_certificate(ns.spec);
      out.reports.push_back(std::move(e));
    } catch (const dim::SpecError& e) {
      out.diagnostics.push_back({ns.name, "compute.error", e.what()});
    }
  }
  std::sort(out.reports.begin(), out.reports.end(),
            [](const io::ReportEntry& a, const io::ReportEntry& b) { return a.name < b.name; });
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const io::Diagnostic& a, const io::Diagnostic& b) { return a.name < b.name; });
  return out;
}

Engine Engine::standard() {
  return Engine{
      [](const IntMatrix& a) { return linalg::max_fixed_rank(a); },
      [](const IntMatrix& a) { return linalg::matrix_order(a); },
      [](const GroupSpec& g) { return dim::compute_report(g); },
      [](std::size_t n, const IntMatrix& a) { return coh::top_cohomology(n, a); },
  };
}

Engine Engine::with_fault(const std::string& fault) {
  Engine e = standard();
  if (fault == "max_fixed_rank") {
    e.max_fixed_rank = [](const IntMatrix& a) {
      auto r = linalg::max_fixed_rank(a);
      ++r.rank;
      return r;
    };
  } else if (fault == "matrix_order") {
    e.matrix_order = [](const IntMatrix& a) {
      auto o = linalg::matrix_order(a);
      return o.is_finite() ? linalg::MatrixOrder::finite(o.value() + 1) : linalg::MatrixOrder::finite(1);
    };
  } else if (fault == "hdim") {
    e.compute = [](const GroupSpec& g) {
      auto r = dim::compute_report(g);
      r.hdim_vcyc.lo += 2;
      r.hdim_vcyc.hi += 2;
      return r;
    };
  } else if (fault == "top_cohomology") {
    e.top_cohomology = [](std::size_t n, const IntMatrix& a) {
      auto t = coh::top_cohomology(n, a);
      return t == AbelianGroup::free(1) ? AbelianGroup::cyclic(2) : AbelianGroup::free(1);
    };
  } else {
    throw UsageError("unknown fault '" + fault + "'");
  }
  return e;
}

VerifyOutcome cmd_verify(const io::SpecDocument& doc, std::uint64_t oracle_depth, const Engine& engine) {
  Verifier v(oracle_depth, engine);
  for (const auto& ns : doc.groups)
    if (ns.valid()) v.entry(ns);
  return v.out;
}

io::Json cmd_cohomology(const io::SpecDocument& doc, std::size_t degree_max) {
  io::Json tables = io::Json::array();
  io::Json skipped = io::Json::array();
  std::vector<const io::NamedSpec*> entries;
  for (const auto& ns : doc.groups)
    if (ns.valid()) entries.push_back(&ns);
  std::sort(entries.begin(), entries.end(),
            [](const io::NamedSpec* a, const io::NamedSpec* b) { return a->name < b->name; });
  for (const auto* ns : entries) {
    const GroupSpec g = model::normalize_spec(ns->spec);
    const auto* z = g.as<model::ZnByZ>();
    if (!z) {
      skipped.push_back(ns->name);
      continue;
    }
    coh::CohomologyTable t = coh::wang_cohomology(z->n, z->a);
    io::Json j = io::cohomology_to_json(t);
    io::Json groups = io::Json::array();
    for (const auto& x : j["groups"])
      if (x["degree"].get<std::size_t>() <= degree_max) groups.push_back(x);
    j["groups"] = groups;
    j["name"] = ns->name;
    j["n"] = z->n;
    j["top_cohomology"] = io::cohomology_to_json({{coh::top_cohomology(z->n, z->a)}})["groups"][0];
    j["top_cohomology"].erase("degree");
    tables.push_back(std::move(j));
  }
  return io::Json{{"format_version", io::kFormatVersion},
                  {"skipped", skipped},
                  {"tables", tables},
                  {"tool", io::kToolName},
                  {"tool_version", io::kToolVersion}};
}

dim::DimReport cmd_product(const io::SpecDocument& doc, const std::string& left, const std::string& right) {
  const io::NamedSpec* l = doc.find(left);
  const io::NamedSpec* r = doc.find(right);
  if (!l) throw UsageError("unknown group name '" + left + "'");
  if (!r) throw UsageError("unknown group name '" + right + "'");
  for (const auto* ns : {l, r})
    if (!ns->valid())
      throw dim::SpecError("entry '" + ns->name + "' is invalid: " + ns->violations.front().rule,
                           ns->violations);
  return dim::compute_report(GroupSpec::product(l->spec, r->spec));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of classifying spaces for proper and virtually cyclic actions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kToolVersion));

  std::string input;
  std::string format = "json";
  std::optional<std::uint64_t> depth;
  std::string fault;
  std::size_t degree_max = 64;
  std::string left;
  std::string right;

  auto* compute = app.add_subcommand("compute", "Compute hdim values for every group in a document");
  compute->add_option("--input", input, "Spec document (JSON)")->required();
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));

  auto* verify = app.add_subcommand("verify", "Cross-check the engine against brute-force oracles");
  verify->add_option("--input", input, "Spec document (JSON)")->required();
  verify->add_option("--oracle-depth", depth, "Brute-force depth K")->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"max_fixed_rank", "matrix_order", "hdim", "top_cohomology"}))
      ->group("");

  auto* cohom = app.add_subcommand("cohomology", "Wang-sequence cohomology of Z^n-by-Z entries");
  cohom->add_option("--input", input, "Spec document (JSON)")->required();
  cohom->add_option("--degree-max", degree_max, "Highest degree to print");

  auto* product = app.add_subcommand("product", "Report for the direct product of two entries");
  product->add_option("--input", input, "Spec document (JSON)")->required();
  product->add_option("--left", left, "Name of the left factor")->required();
  product->add_option("--right", right, "Name of the right factor")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    io::SpecDocument doc;
    try {
      doc = io::parse_spec_document(read_file(input));
    } catch (const io::ParseError& e) {
      err << "error: " << e.rule() << ": " << e.what() << "\n";
      return kExitValidation;
    }

    if (compute->parsed()) {
      auto report = cmd_compute(doc, default_depth_for(doc));
      out << (format == "md" ? io::report_to_markdown(report)
                             : io::dump_canonical(io::report_to_json(report)));
      print_diagnostics(doc, err);
      return report.diagnostics.empty() ? kExitOk : kExitValidation;
    }
    if (verify->parsed()) {
      const std::uint64_t k = depth ? *depth : default_depth_for(doc);
      const Engine engine = fault.empty() ? Engine::standard() : Engine::with_fault(fault);
      VerifyOutcome v = cmd_verify(doc, k, engine);
      out << "oracle depth: " << k << "\n";
      for (const auto& w : v.warnings) out << "warning: " << w << "\n";
      for (const auto& d : v.discrepancies) out << "DISCREPANCY: " << d << "\n";
      out << "checks: " << v.checks << ", discrepancies: " << v.discrepancies.size()
          << ", warnings: " << v.warnings.size() << "\n";
      print_diagnostics(doc, err);
      if (!v.ok()) return kExitDiscrepancy;
      return doc.all_valid() ? kExitOk : kExitValidation;
    }
    if (cohom->parsed()) {
      out << io::dump_canonical(cmd_cohomology(doc, degree_max));
      print_diagnostics(doc, err);
      return doc.all_valid() ? kExitOk : kExitValidation;
    }
    if (product->parsed()) {
      dim::DimReport r = cmd_product(doc, left, right);
      io::ReportDocument rd;
      rd.oracle_depth = default_depth_for(doc);
      rd.reports.push_back({left + " x " + right, std::move(r), std::nullopt, std::nullopt});
      if (rd.reports.front().report.tag == dim::CaseTag::PolyZ_Many)
        rd.reports.front().mv_certificate = coh::mv_case3_certificate(rd.reports.front().report.spec);
      out << io::dump_canonical(io::report_to_json(rd));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dim::SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace vcyc::cli
