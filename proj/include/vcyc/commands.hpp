#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcyc/cohomology.hpp"
#include "vcyc/cyclotomic.hpp"
#include "vcyc/dim_engine.hpp"
#include "vcyc/report_json.hpp"
#include "vcyc/spec_json.hpp"

namespace vcyc::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitDiscrepancy = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oracle depth for a document: VCYC_ORACLE_DEPTH if set, otherwise
/// lcm{d : totient(d) <= n} (capped) for the largest matrix size n present.
std::uint64_t default_depth_for(const io::SpecDocument& doc);

/// One report per valid entry, ordered by name; invalid entries become
/// diagnostics.
io::ReportDocument cmd_compute(const io::SpecDocument& doc, std::uint64_t oracle_depth);

/// The computations cmd_verify cross-examines, swappable for fault injection.
struct Engine {
  std::function<linalg::MaxFixedRank(const linalg::IntMatrix&)> max_fixed_rank;
  std::function<linalg::MatrixOrder(const linalg::IntMatrix&)> matrix_order;
  std::function<dim::DimReport(const model::GroupSpec&)> compute;
  std::function<AbelianGroup(std::size_t, const linalg::IntMatrix&)> top_cohomology;

  static Engine standard();
  /// One of max_fixed_rank, matrix_order, hdim, top_cohomology.
  static Engine with_fault(const std::string& fault);
};

struct VerifyOutcome {
  std::size_t checks = 0;
  std::vector<std::string> discrepancies;
  std::vector<std::string> warnings;
  bool ok() const { return discrepancies.empty(); }
};

VerifyOutcome cmd_verify(const io::SpecDocument& doc, std::uint64_t oracle_depth,
                         const Engine& engine = Engine::standard());

/// Wang tables for the Z^n-by-Z entries, truncated at degree_max.
io::Json cmd_cohomology(const io::SpecDocument& doc, std::size_t degree_max);

/// Throws UsageError for unknown names and dim::SpecError for invalid or
/// unsupported factors.
dim::DimReport cmd_product(const io::SpecDocument& doc, const std::string& left,
                           const std::string& right);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vcyc::cli
