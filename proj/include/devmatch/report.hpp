#ifndef DEVMATCH_REPORT_HPP
#define DEVMATCH_REPORT_HPP

#include "devmatch/matcher.hpp"
#include "devmatch/process.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace devmatch {

/// Plain-text report: header, one line per device, then findings if any.
/// Colors are always spelled out as words.
std::string render_text(const MatchReport& report, std::span<const FeasibilityFinding> findings = {});

std::string render_findings_text(std::span<const FeasibilityFinding> findings);

/// Normative JSON serialization consumed by the service and the web UI.
std::string render_structured(const MatchReport& report, std::span<const FeasibilityFinding> findings = {});

std::string render_findings_structured(std::span<const FeasibilityFinding> findings);

struct StructuredReport {
    MatchReport report;
    std::vector<FeasibilityFinding> findings;

    bool operator==(const StructuredReport&) const = default;
};

/// Inverse of render_structured. Throws Error(Malformed) on bad input.
StructuredReport parse_structured(std::string_view text);

} // namespace devmatch

#endif // DEVMATCH_REPORT_HPP
