#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vcyc/group_spec.hpp"

namespace vcyc::io {

using Json = nlohmann::json;

/// Structural problem in a JSON spec, tagged with a rule id.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string rule, const std::string& message)
      : std::runtime_error(message), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

struct Diagnostic {
  std::string name;
  std::string rule;
  std::string message;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct NamedSpec {
  std::string name;
  model::GroupSpec spec;
  std::vector<model::Violation> violations;  // empty when the entry is valid
  bool valid() const { return violations.empty(); }
};

struct SpecDocument {
  std::string version;
  /// Entries that parsed structurally, in input order.
  std::vector<NamedSpec> groups;
  /// Parse and validation problems, one per violation.
  std::vector<Diagnostic> diagnostics;

  bool all_valid() const { return diagnostics.empty(); }
  const NamedSpec* find(const std::string& name) const;
};

/// Throws ParseError for malformed JSON or a malformed top level; entry-level
/// problems land in `diagnostics` without stopping the rest of the batch.
SpecDocument parse_spec_document(std::string_view bytes);

model::GroupSpec spec_from_json(const Json& j);
Json spec_to_json(const model::GroupSpec& g);

/// Integers are read from JSON integers or decimal strings.
Integer integer_from_json(const Json& j, const std::string& what);
/// Emitted as a JSON integer when it fits in 64 bits, otherwise as a string.
Json integer_to_json(const Integer& v);

linalg::IntMatrix matrix_from_json(const Json& j, const std::string& what);
Json matrix_to_json(const linalg::IntMatrix& m);

}  // namespace vcyc::io
