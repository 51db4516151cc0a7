#include "vcyc/report_json.hpp"

#include <sstream>

namespace vcyc::io {
namespace {

using dim::CaseTag;
using dim::DimRange;
using linalg::IntPoly;
using linalg::Lattice;

const Json& at(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("report.type", std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("report.missing_field", std::string("missing field '") + key + "'");
  return *it;
}

std::string string_at(const Json& j, const char* key) {
  const Json& v = at(j, key);
  if (!v.is_string()) throw ParseError("report.type", std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t size_from(const Json& j, const char* what) {
  Integer v = integer_from_json(j, what);
  if (v < 0 || !v.fits_ulong_p()) throw ParseError("report.type", std::string(what) + " out of range");
  return v.get_ui();
}

Json vector_to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

std::vector<Integer> vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError("report.type", std::string(what) + " must be an array");
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer_from_json(x, what));
  return v;
}

Json lattice_to_json(const Lattice& l) {
  Json j;
  j["ambient_rank"] = static_cast<std::uint64_t>(l.ambient_rank());
  j["basis"] = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) j["basis"].push_back(vector_to_json(l.basis_vector(i)));
  return j;
}

Lattice lattice_from_json(const Json& j) {
  const std::size_t n = size_from(at(j, "ambient_rank"), "ambient_rank");
  const Json& b = at(j, "basis");
  if (!b.is_array()) throw ParseError("report.type", "lattice basis must be an array");
  std::vector<std::vector<Integer>> cols;
  for (const auto& v : b) {
    cols.push_back(vector_from_json(v, "basis vector"));
    if (cols.back().size() != n) throw ParseError("report.type", "basis vector length mismatch");
  }
  return cols.empty() ? Lattice(n) : Lattice::span(linalg::IntMatrix::from_columns(n, cols));
}

Json group_to_json(const AbelianGroup& g) {
  Json j;
  j["free_rank"] = static_cast<std::uint64_t>(g.free_rank());
  j["torsion"] = vector_to_json(g.torsion());
  return j;
}

AbelianGroup group_from_json(const Json& j) {
  return AbelianGroup::from_cyclic_orders(size_from(at(j, "free_rank"), "free_rank"),
                                          vector_from_json(at(j, "torsion"), "torsion"));
}

Json payload_to_json(const dim::WitnessPayload& p) {
  Json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          j["type"] = "none";
        } else if constexpr (std::is_same_v<T, Integer>) {
          j["type"] = "integer";
          j["value"] = integer_to_json(v);
        } else if constexpr (std::is_same_v<T, linalg::IntMatrix>) {
          j["type"] = "matrix";
          j["rows"] = matrix_to_json(v);
        } else if constexpr (std::is_same_v<T, Lattice>) {
          j = lattice_to_json(v);
          j["type"] = "lattice";
        } else {
          j["type"] = "polynomial";
          j["coefficients"] = vector_to_json(v.coefficients());
        }
      },
      p);
  return j;
}

dim::WitnessPayload payload_from_json(const Json& j) {
  const std::string type = string_at(j, "type");
  if (type == "none") return std::monostate{};
  if (type == "integer") return integer_from_json(at(j, "value"), "value");
  if (type == "matrix") return matrix_from_json(at(j, "rows"), "rows");
  if (type == "lattice") return lattice_from_json(j);
  if (type == "polynomial") return IntPoly(vector_from_json(at(j, "coefficients"), "coefficients"));
  throw ParseError("report.type", "unknown witness payload type '" + type + "'");
}

Json diagnostics_to_json(const std::vector<Diagnostic>& ds) {
  Json a = Json::array();
  for (const auto& d : ds) a.push_back(Json{{"message", d.message}, {"name", d.name}, {"rule", d.rule}});
  return a;
}

std::string range_text(const DimRange& r) {
  if (r.is_exact()) return std::to_string(r.lo);
  return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

}  // namespace

Json dim_report_to_json(const dim::DimReport& r) {
  Json j;
  j["case"] = dim::to_string(r.tag);
  j["citations"] = r.citations;
  j["hdim_fin"] = static_cast<std::uint64_t>(r.hdim_fin);
  if (r.hdim_vcyc.is_exact())
    j["hdim_vcyc"] = static_cast<std::uint64_t>(r.hdim_vcyc.lo);
  else
    j["hdim_vcyc"] = Json{{"hi", static_cast<std::uint64_t>(r.hdim_vcyc.hi)},
                          {"lo", static_cast<std::uint64_t>(r.hdim_vcyc.lo)}};
  j["spec"] = spec_to_json(r.spec);
  j["vcd"] = r.vcd ? Json(static_cast<std::uint64_t>(*r.vcd)) : Json(nullptr);
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj{{"citation", w.citation}, {"data", payload_to_json(w.data)}, {"kind", w.kind}};
    if (w.exponent) wj["exponent"] = *w.exponent;
    j["witnesses"].push_back(std::move(wj));
  }
  return j;
}

dim::DimReport dim_report_from_json(const Json& j) {
  dim::DimReport r;
  auto tag = dim::case_tag_from_string(string_at(j, "case"));
  if (!tag) throw ParseError("report.type", "unknown case tag");
  r.tag = *tag;
  const Json& cites = at(j, "citations");
  if (!cites.is_array()) throw ParseError("report.type", "citations must be an array");
  for (const auto& c : cites) {
    if (!c.is_string()) throw ParseError("report.type", "citation must be a string");
    r.citations.push_back(c.get<std::string>());
  }
  r.hdim_fin = size_from(at(j, "hdim_fin"), "hdim_fin");
  const Json& hv = at(j, "hdim_vcyc");
  if (hv.is_object())
    r.hdim_vcyc = {size_from(at(hv, "lo"), "lo"), size_from(at(hv, "hi"), "hi")};
  else
    r.hdim_vcyc = DimRange::exact(size_from(hv, "hdim_vcyc"));
  r.spec = spec_from_json(at(j, "spec"));
  const Json& vcd = at(j, "vcd");
  if (!vcd.is_null()) r.vcd = size_from(vcd, "vcd");
  const Json& ws = at(j, "witnesses");
  if (!ws.is_array()) throw ParseError("report.type", "witnesses must be an array");
  for (const auto& wj : ws) {
    dim::Witness w;
    w.kind = string_at(wj, "kind");
    w.citation = string_at(wj, "citation");
    w.data = payload_from_json(at(wj, "data"));
    if (auto e = wj.find("exponent"); e != wj.end()) w.exponent = size_from(*e, "exponent");
    r.witnesses.push_back(std::move(w));
  }
  return r;
}

Json cohomology_to_json(const coh::CohomologyTable& t) {
  Json a = Json::array();
  for (std::size_t k = 0; k < t.groups.size(); ++k) {
    Json g = group_to_json(t.groups[k]);
    g["degree"] = static_cast<std::uint64_t>(k);
    a.push_back(std::move(g));
  }
  return Json{{"euler_characteristic", coh::euler_characteristic(t)}, {"groups", a}};
}

coh::CohomologyTable cohomology_from_json(const Json& j) {
  coh::CohomologyTable t;
  const Json& gs = at(j, "groups");
  if (!gs.is_array()) throw ParseError("report.type", "cohomology groups must be an array");
  for (std::size_t k = 0; k < gs.size(); ++k) {
    if (size_from(at(gs[k], "degree"), "degree") != k)
      throw ParseError("report.type", "cohomology degrees must be consecutive from 0");
    t.groups.push_back(group_from_json(gs[k]));
  }
  return t;
}

Json certificate_to_json(const coh::MVCertificate& c) {
  Json classes = Json::array();
  for (const auto& l : c.classes) classes.push_back(lattice_to_json(l));
  return Json{{"ambient", c.ambient},
              {"classes", classes},
              {"conclusion", c.conclusion},
              {"degree", static_cast<std::uint64_t>(c.degree)},
              {"source_group", group_to_json(c.source_group)},
              {"target_count", static_cast<std::uint64_t>(c.target_count)}};
}

coh::MVCertificate certificate_from_json(const Json& j) {
  coh::MVCertificate c;
  c.ambient = string_at(j, "ambient");
  const Json& classes = at(j, "classes");
  if (!classes.is_array()) throw ParseError("report.type", "classes must be an array");
  for (const auto& l : classes) c.classes.push_back(lattice_from_json(l));
  c.conclusion = string_at(j, "conclusion");
  c.degree = size_from(at(j, "degree"), "degree");
  c.source_group = group_from_json(at(j, "source_group"));
  c.target_count = size_from(at(j, "target_count"), "target_count");
  return c;
}

Json report_to_json(const ReportDocument& d) {
  Json reports = Json::array();
  for (const auto& e : d.reports) {
    Json ej{{"name", e.name}, {"report", dim_report_to_json(e.report)}};
    if (e.cohomology) ej["cohomology"] = cohomology_to_json(*e.cohomology);
    if (e.mv_certificate) ej["mv_certificate"] = certificate_to_json(*e.mv_certificate);
    reports.push_back(std::move(ej));
  }
  return Json{{"diagnostics", diagnostics_to_json(d.diagnostics)},
              {"format_version", d.format_version},
              {"oracle_depth", d.oracle_depth},
              {"reports", reports},
              {"tool", d.tool},
              {"tool_version", d.tool_version}};
}

ReportDocument report_from_json(const Json& j) {
  ReportDocument d;
  d.format_version = string_at(j, "format_version");
  d.tool = string_at(j, "tool");
  d.tool_version = string_at(j, "tool_version");
  d.oracle_depth = size_from(at(j, "oracle_depth"), "oracle_depth");
  const Json& ds = at(j, "diagnostics");
  if (!ds.is_array()) throw ParseError("report.type", "diagnostics must be an array");
  for (const auto& x : ds)
    d.diagnostics.push_back({string_at(x, "name"), string_at(x, "rule"), string_at(x, "message")});
  const Json& rs = at(j, "reports");
  if (!rs.is_array()) throw ParseError("report.type", "reports must be an array");
  for (const auto& x : rs) {
    ReportEntry e;
    e.name = string_at(x, "name");
    e.report = dim_report_from_json(at(x, "report"));
    if (auto c = x.find("cohomology"); c != x.end()) e.cohomology = cohomology_from_json(*c);
    if (auto c = x.find("mv_certificate"); c != x.end()) e.mv_certificate = certificate_from_json(*c);
    d.reports.push_back(std::move(e));
  }
  return d;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string report_to_markdown(const ReportDocument& d) {
  std::ostringstream os;
  os << "| name | group | vcd | hdim_fin | hdim_vcyc | case | citations |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& e : d.reports) {
    const auto& r = e.report;
    os << "| " << e.name << " | " << r.spec.tag() << " | " << (r.vcd ? std::to_string(*r.vcd) : "-")
       << " | " << r.hdim_fin << " | " << range_text(r.hdim_vcyc) << " | " << dim::to_string(r.tag)
       << " | ";
    for (std::size_t i = 0; i < r.citations.size(); ++i) os << (i ? ", " : "") << r.citations[i];
    os << " |\n";
  }
  if (!d.diagnostics.empty()) {
    os << "\n**Diagnostics**\n\n";
    for (const auto& x : d.diagnostics) os << "- " << x.name << ": " << x.rule << ": " << x.message << "\n";
  }
  return os.str();
}

}  // namespace vcyc::io
