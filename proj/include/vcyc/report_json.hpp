#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcyc/cohomology.hpp"
#include "vcyc/dim_engine.hpp"
#include "vcyc/spec_json.hpp"

namespace vcyc::io {

inline constexpr const char* kToolName = "vcyc";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kFormatVersion = "1";

struct ReportEntry {
  std::string name;
  dim::DimReport report;
  std::optional<coh::CohomologyTable> cohomology;
  std::optional<coh::MVCertificate> mv_certificate;
  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct ReportDocument {
  std::string format_version = kFormatVersion;
  std::string tool = kToolName;
  std::string tool_version = kToolVersion;
  std::uint64_t oracle_depth = 1;
  std::vector<ReportEntry> reports;  // ordered by name
  std::vector<Diagnostic> diagnostics;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

Json dim_report_to_json(const dim::DimReport& r);
dim::DimReport dim_report_from_json(const Json& j);

Json cohomology_to_json(const coh::CohomologyTable& t);
coh::CohomologyTable cohomology_from_json(const Json& j);

Json certificate_to_json(const coh::MVCertificate& c);
coh::MVCertificate certificate_from_json(const Json& j);

Json report_to_json(const ReportDocument& d);
/// Throws ParseError on anything that report_to_json would not produce.
ReportDocument report_from_json(const Json& j);

/// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

std::string report_to_markdown(const ReportDocument& d);

}  // namespace vcyc::io
