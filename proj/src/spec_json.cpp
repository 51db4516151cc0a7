#include "vcyc/spec_json.hpp"

#include <set>

namespace vcyc::io {
namespace {

using namespace model;

constexpr std::size_t kMaxCount = 1000000;

const Json& field(const Json& j, const char* key, const std::string& tag) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("spec.missing_field", tag + ": missing field '" + key + "'");
  return *it;
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& tag) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  allowed.insert("tag");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError("spec.unknown_field", tag + ": unknown field '" + k + "'");
}

std::size_t count_from_json(const Json& j, const std::string& what) {
  Integer v = integer_from_json(j, what);
  if (v < 0) throw ParseError("spec.type", what + " must be non-negative");
  if (v > static_cast<unsigned long>(kMaxCount)) throw ParseError("spec.type", what + " is too large");
  return v.get_ui();
}

std::vector<IntMatrix> matrix_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError("spec.type", what + " must be an array of matrices");
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(matrix_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

bool flag(const Json& j, const char* key, const std::string& tag) {
  const Json& v = field(j, key, tag);
  if (!v.is_boolean()) throw ParseError("spec.type", tag + ": '" + key + "' must be a boolean");
  return v.get<bool>();
}

const char* kind_name(LocalKind k) {
  switch (k) {
    case LocalKind::LocallyFinite:
      return "locally_finite";
    case LocalKind::LocallyVirtuallyCyclic:
      return "locally_virtually_cyclic";
    case LocalKind::ProperDimAtMostOne:
      return "proper_dim_at_most_one";
  }
  return "";
}

}  // namespace

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("spec.type", what + ": '" + j.get<std::string>() + "' is not an integer");
    }
  }
  if (j.is_number_float())
    throw ParseError("spec.type", what + ": non-integer number (use a decimal string for large values)");
  throw ParseError("spec.type", what + " must be an integer");
}

Json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return Json(to_int64(v));
  return Json(v.get_str());
}

IntMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError("spec.type", what + " must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) throw ParseError("spec.type", what + ": row " + std::to_string(r) + " is not an array");
    std::vector<Integer> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(integer_from_json(j[r][c], what + "[" + std::to_string(r) + "][" +
                                                   std::to_string(c) + "]"));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("spec.type", what + ": rows have different lengths");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("spec.type", "group spec must be an object");
  auto it = j.find("tag");
  if (it == j.end() || !it->is_string()) throw ParseError("spec.missing_tag", "group spec needs a string 'tag'");
  const std::string tag = it->get<std::string>();
  if (tag == "free_abelian") {
    only_keys(j, {"n"}, tag);
    return FreeAbelian{count_from_json(field(j, "n", tag), "n")};
  }
  if (tag == "zn_by_z") {
    only_keys(j, {"n", "A"}, tag);
    return ZnByZ{count_from_json(field(j, "n", tag), "n"), matrix_from_json(field(j, "A", tag), "A")};
  }
  if (tag == "crystallographic") {
    only_keys(j, {"n", "point_group"}, tag);
    return Crystallographic{count_from_json(field(j, "n", tag), "n"),
                            matrix_list(field(j, "point_group", tag), "point_group")};
  }
  if (tag == "central_extension") {
    only_keys(j, {"m", "n", "form"}, tag);
    return CentralExtension{count_from_json(field(j, "m", tag), "m"),
                            count_from_json(field(j, "n", tag), "n"),
                            matrix_list(field(j, "form", tag), "form")};
  }
  if (tag == "heisenberg_by_z") {
    only_keys(j, {"n", "form", "f_bar", "epsilon"}, tag);
    Integer eps = integer_from_json(field(j, "epsilon", tag), "epsilon");
    int e = eps == 1 ? 1 : eps == -1 ? -1 : 0;  // anything else fails validation
    return HeisenbergByZ{count_from_json(field(j, "n", tag), "n"),
                         matrix_from_json(field(j, "form", tag), "form"),
                         matrix_from_json(field(j, "f_bar", tag), "f_bar"), e};
  }
  if (tag == "z_one_over_p") {
    only_keys(j, {"p"}, tag);
    return model::ZOneOverP{integer_from_json(field(j, "p", tag), "p")};
  }
  if (tag == "countable_local") {
    only_keys(j, {"kind", "infinite", "virtually_cyclic"}, tag);
    const Json& k = field(j, "kind", tag);
    if (!k.is_string()) throw ParseError("spec.type", "countable_local: 'kind' must be a string");
    CountableLocal c;
    const std::string kind = k.get<std::string>();
    if (kind == "locally_finite")
      c.kind = LocalKind::LocallyFinite;
    else if (kind == "locally_virtually_cyclic")
      c.kind = LocalKind::LocallyVirtuallyCyclic;
    else if (kind == "proper_dim_at_most_one")
      c.kind = LocalKind::ProperDimAtMostOne;
    else
      throw ParseError("spec.unknown_kind", "countable_local: unknown kind '" + kind + "'");
    c.infinite = flag(j, "infinite", tag);
    c.virtually_cyclic = flag(j, "virtually_cyclic", tag);
    return c;
  }
  if (tag == "product") {
    only_keys(j, {"left", "right"}, tag);
    return GroupSpec::product(spec_from_json(field(j, "left", tag)),
                              spec_from_json(field(j, "right", tag)));
  }
  throw ParseError("spec.unknown_tag", "unknown variant tag '" + tag + "'");
}

Json spec_to_json(const GroupSpec& g) {
  Json j;
  j["tag"] = g.tag();
  auto count = [](std::size_t v) { return Json(static_cast<std::uint64_t>(v)); };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FreeAbelian>) {
          j["n"] = count(v.n);
        } else if constexpr (std::is_same_v<T, ZnByZ>) {
          j["n"] = count(v.n);
          j["A"] = matrix_to_json(v.a);
        } else if constexpr (std::is_same_v<T, Crystallographic>) {
          j["n"] = count(v.n);
          j["point_group"] = Json::array();
          for (const auto& p : v.point_group) j["point_group"].push_back(matrix_to_json(p));
        } else if constexpr (std::is_same_v<T, CentralExtension>) {
          j["m"] = count(v.m);
          j["n"] = count(v.n);
          j["form"] = Json::array();
          for (const auto& f : v.form) j["form"].push_back(matrix_to_json(f));
        } else if constexpr (std::is_same_v<T, HeisenbergByZ>) {
          j["n"] = count(v.n);
          j["form"] = matrix_to_json(v.form);
          j["f_bar"] = matrix_to_json(v.f_bar);
          j["epsilon"] = v.epsilon;
        } else if constexpr (std::is_same_v<T, model::ZOneOverP>) {
          j["p"] = integer_to_json(v.p);
        } else if constexpr (std::is_same_v<T, CountableLocal>) {
          j["kind"] = kind_name(v.kind);
          j["infinite"] = v.infinite;
          j["virtually_cyclic"] = v.virtually_cyclic;
        } else {
          j["left"] = spec_to_json(*v.left);
          j["right"] = spec_to_json(*v.right);
        }
      },
      g.value());
  return j;
}

const NamedSpec* SpecDocument::find(const std::string& name) const {
  for (const auto& g : groups)
    if (g.name == name) return &g;
  return nullptr;
}

SpecDocument parse_spec_document(std::string_view bytes) {
  Json root;
  try {
    root = Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("document.malformed_json", e.what());
  }
  if (!root.is_object()) throw ParseError("document.type", "document must be a JSON object");
  SpecDocument doc;
  auto v = root.find("version");
  if (v == root.end() || !v->is_string())
    throw ParseError("document.version", "document needs a string 'version'");
  doc.version = v->get<std::string>();
  if (doc.version != "1")
    throw ParseError("document.version", "unsupported schema version '" + doc.version + "'");
  for (const auto& [k, val] : root.items())
    if (k != "version" && k != "groups")
      throw ParseError("document.unknown_field", "unknown top-level field '" + k + "'");
  auto groups = root.find("groups");
  if (groups == root.end()) return doc;
  if (!groups->is_array()) throw ParseError("document.type", "'groups' must be an array");

  std::set<std::string> names;
  for (std::size_t i = 0; i < groups->size(); ++i) {
    const Json& entry = (*groups)[i];
    std::string name = "#" + std::to_string(i);
    try {
      if (!entry.is_object()) throw ParseError("entry.type", "entry must be an object");
      auto n = entry.find("name");
      if (n == entry.end() || !n->is_string())
        throw ParseError("entry.name", "entry needs a string 'name'");
      name = n->get<std::string>();
      for (const auto& [k, val] : entry.items())
        if (k != "name" && k != "spec") throw ParseError("entry.unknown_field", "unknown field '" + k + "'");
      if (!names.insert(name).second)
        throw ParseError("document.duplicate_name", "duplicate group name '" + name + "'");
      auto s = entry.find("spec");
      if (s == entry.end()) throw ParseError("entry.spec", "entry needs a 'spec'");
      NamedSpec ns{name, spec_from_json(*s), {}};
      ns.violations = validate_spec(ns.spec).violations;
      for (const auto& viol : ns.violations) doc.diagnostics.push_back({name, viol.rule, viol.message});
      doc.groups.push_back(std::move(ns));
    } catch (const ParseError& e) {
      doc.diagnostics.push_back({name, e.rule(), e.what()});
    }
  }
  return doc;
}

}  // namespace vcyc::io
