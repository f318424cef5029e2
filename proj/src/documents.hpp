// JSON encoding shared by the document readers, the report renderer and the
// HTTP service. Not installed; the public headers expose text-level APIs.
#ifndef DEVMATCH_DOCUMENTS_HPP
#define DEVMATCH_DOCUMENTS_HPP

#include "devmatch/catalog.hpp"
#include "devmatch/matcher.hpp"
#include "devmatch/process.hpp"
#include "devmatch/profile.hpp"

#include "json.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace devmatch::detail {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Error(Malformed) whose message
/// carries the parser's line and column.
Json parse_json(std::string_view text, std::string_view what);

std::string dump(const Json& json);

/// Accumulates violations while a document is walked, remembering the most
/// severe kind seen.
class ViolationSink {
public:
    void add(ErrorKind kind, std::string path, std::string message);
    bool empty() const noexcept { return violations_.empty(); }
    void throw_if_any() const;

private:
    std::vector<Violation> violations_;
    ErrorKind worst_{ErrorKind::OutOfRange};
};

std::string join_path(std::string_view parent, std::string_view key);
std::string index_path(std::string_view parent, std::size_t index);

Json profile_to_json(const DisabilityProfile& profile);
DisabilityProfile profile_from_json(const Json& json);

Json scales_to_json(std::span<const DegreeScale> scales);

Json catalog_to_json(const Catalog& catalog);
Catalog catalog_from_json(const Json& json);

Json plan_to_json(const WorkstationPlan& plan);
WorkstationPlan plan_from_json(const Json& json);

Json findings_to_json(std::span<const FeasibilityFinding> findings);
std::vector<FeasibilityFinding> findings_from_json(const Json& json);

Json report_to_json(const MatchReport& report);
MatchReport report_from_json(const Json& json);

} // namespace devmatch::detail

#endif // DEVMATCH_DOCUMENTS_HPP
