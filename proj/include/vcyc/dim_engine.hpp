#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "vcyc/group_spec.hpp"
#include "vcyc/int_poly.hpp"
#include "vcyc/lattice.hpp"

namespace vcyc::dim {

using linalg::IntMatrix;
using linalg::IntPoly;
using linalg::Lattice;
using model::GroupSpec;

enum class CaseTag {
  PolyZ_Empty,
  PolyZ_UniqueLow,
  PolyZ_UniqueHigh,
  PolyZ_Many,
  VirtuallyZn,
  LowDim_LocallyFinite,
  LowDim_LocallyVC,
  LowDim_VC,
  LowDim_General,
  ZOneOverP,
  ProductExact,
  ProductBounds,
};

std::string to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(const std::string& s);

/// hdim_vcyc - vcd forced by a poly-Z case tag; empty for other tags.
std::optional<int> case_offset(CaseTag tag);

using WitnessPayload = std::variant<std::monostate, Integer, IntMatrix, Lattice, IntPoly>;

struct Witness {
  std::string kind;
  WitnessPayload data;
  std::optional<std::uint64_t> exponent;  // the k in ker(A^k - I), when relevant
  std::string citation;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Closed integer interval; exact when lo == hi.
struct DimRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
  static DimRange exact(std::size_t v) { return {v, v}; }
  bool is_exact() const { return lo == hi; }
  friend bool operator==(const DimRange&, const DimRange&) = default;
};

struct DimReport {
  GroupSpec spec;
  std::optional<std::size_t> vcd;
  std::size_t hdim_fin = 0;
  DimRange hdim_vcyc;
  CaseTag tag = CaseTag::VirtuallyZn;
  std::vector<Witness> witnesses;
  std::vector<std::string> citations;
  friend bool operator==(const DimReport&, const DimReport&) = default;
};

/// Raised when an operation receives a spec that fails validation or lies
/// outside the operation's domain.
class SpecError : public std::invalid_argument {
 public:
  SpecError(const std::string& what, std::vector<model::Violation> violations = {})
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  const std::vector<model::Violation>& violations() const { return violations_; }

 private:
  std::vector<model::Violation> violations_;
};

/// Full report for a valid spec; throws SpecError otherwise.
DimReport compute_report(const GroupSpec& g);

std::size_t hdim_fin(const GroupSpec& g);
DimRange hdim_vcyc(const GroupSpec& g);

struct CaseResult {
  CaseTag tag;
  std::vector<Witness> witnesses;
};
/// Poly-Z case with witnesses; rejects groups that are not virtually poly-Z.
CaseResult classify_case(const GroupSpec& g);

/// Combines two factor reports. Both must be exact and virtually poly-Z.
DimReport product_dims(const DimReport& a, const DimReport& b);

struct LowDimValues {
  std::size_t hdim_fin;
  std::size_t hdim_vcyc;
  CaseTag tag;
};
/// The low-dimension table; throws SpecError on inconsistent flags.
LowDimValues low_dim_table(const model::CountableLocal& g);

/// A vector completing the saturated lattice L to a saturated lattice of rank
/// rank(L) + 1; requires rank(L) < ambient rank.
std::vector<Integer> complementary_vector(const Lattice& l);

}  // namespace vcyc::dim
