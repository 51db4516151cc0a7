#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "vcyc/int_matrix.hpp"
#include "vcyc/integer.hpp"

namespace vcyc::model {

using linalg::IntMatrix;

/// Z^n.
struct FreeAbelian {
  std::size_t n = 0;
  friend bool operator==(const FreeAbelian&, const FreeAbelian&) = default;
};

/// Z^n semidirect Z, the generator of Z acting by A.
struct ZnByZ {
  std::size_t n = 0;
  IntMatrix a;
  friend bool operator==(const ZnByZ&, const ZnByZ&) = default;
};

/// Z^n extended by a finite point group acting through the given matrices.
struct Crystallographic {
  std::size_t n = 0;
  std::vector<IntMatrix> point_group;
  friend bool operator==(const Crystallographic&, const Crystallographic&) = default;
};

/// 1 -> Z^m -> G -> Z^n -> 1, central, with commutator pairing given by m
/// alternating n x n forms.
struct CentralExtension {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<IntMatrix> form;
  friend bool operator==(const CentralExtension&, const CentralExtension&) = default;
};

/// H semidirect Z where H is a central Z-extension of Z^n with commutator form
/// `form`, and the automorphism induces f_bar on Z^n and epsilon on the center.
struct HeisenbergByZ {
  std::size_t n = 0;
  IntMatrix form;
  IntMatrix f_bar;
  int epsilon = 1;
  friend bool operator==(const HeisenbergByZ&, const HeisenbergByZ&) = default;
};

/// Z[1/p].
struct ZOneOverP {
  Integer p;
  friend bool operator==(const ZOneOverP&, const ZOneOverP&) = default;
};

enum class LocalKind {
  LocallyFinite,
  LocallyVirtuallyCyclic,  // locally virtually cyclic and not locally finite
  ProperDimAtMostOne,      // proper classifying space of dim <= 1, not locally virtually cyclic
};

/// Countable group known only through the class flags of the low-dimension table.
struct CountableLocal {
  LocalKind kind = LocalKind::LocallyFinite;
  bool infinite = false;
  bool virtually_cyclic = false;
  friend bool operator==(const CountableLocal&, const CountableLocal&) = default;
};

class GroupSpec;

struct Product {
  std::shared_ptr<const GroupSpec> left;
  std::shared_ptr<const GroupSpec> right;
  friend bool operator==(const Product& a, const Product& b);
};

class GroupSpec {
 public:
  using Variant = std::variant<FreeAbelian, ZnByZ, Crystallographic, CentralExtension,
                               HeisenbergByZ, ZOneOverP, CountableLocal, Product>;

  GroupSpec() : value_(FreeAbelian{}) {}
  template <class T>
    requires std::is_constructible_v<Variant, T>
  GroupSpec(T v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static GroupSpec product(GroupSpec left, GroupSpec right);

  const Variant& value() const { return value_; }
  template <class T>
  const T* as() const {
    return std::get_if<T>(&value_);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(value_);
  }

  /// JSON variant tag, e.g. "zn_by_z".
  std::string tag() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.value_ == b.value_; }

 private:
  Variant value_;
};

struct Violation {
  std::string rule;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Maximum matrix dimension accepted anywhere.
inline constexpr std::size_t kMaxRank = 12;
/// Closure cap for crystallographic point groups.
inline constexpr std::size_t kPointGroupCap = 10000;

/// Checks every structural hypothesis. Never throws.
ValidationReport validate_spec(const GroupSpec& g);

/// Rewrites degenerate encodings (m = 0 central extensions become free abelian).
GroupSpec normalize_spec(const GroupSpec& g);

bool is_virtually_poly_z(const GroupSpec& g);

/// Hirsch length; empty for groups that are not virtually poly-Z.
std::optional<std::size_t> vcd_of(const GroupSpec& g);

/// Rank of a free abelian subgroup of the center known to exist (a lower bound
/// for Heisenberg-by-Z). Empty for groups that are not virtually poly-Z.
std::optional<std::size_t> center_rank(const GroupSpec& g);

/// r when the group contains Z^r with finite index, otherwise empty.
std::optional<std::size_t> virtually_abelian_rank(const GroupSpec& g);

/// Every element of the group generated by `gens` (including I), or empty if
/// the closure exceeds `cap` elements.
std::optional<std::vector<IntMatrix>> matrix_group_closure(const std::vector<IntMatrix>& gens,
                                                           std::size_t n, std::size_t cap);

/// Sign of the action on the top class: det A for Z^n by Z, epsilon * det f_bar
/// for Heisenberg-by-Z, +1 for the central and crystallographic families.
int orientation_sign(const GroupSpec& g);

/// Largest square matrix size occurring in the group (0 if none).
std::size_t max_matrix_size(const GroupSpec& g);

/// The commutator forms stacked vertically, m*n x n.
IntMatrix stacked_forms(const std::vector<IntMatrix>& forms, std::size_t n);

}  // namespace vcyc::model
