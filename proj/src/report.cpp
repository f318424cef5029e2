#include "devmatch/report.hpp"

#include "documents.hpp"

#include <string>
#include <sstream>

namespace devmatch {

namespace {

// Left-aligns in a column, always leaving at least one space after the text.
std::string pad(std::string_view text, std::size_t width) {
    std::string out(text);
    out.append(out.size() < width ? width - out.size() : 1, ' ');
    return out;
}

void rstrip(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

} // namespace

std::string render_findings_text(std::span<const FeasibilityFinding> findings) {
    std::ostringstream out;
    for (const auto& f : findings) {
        std::string line = "  " + pad(severity_key(f.severity), 8) + pad(finding_code_key(f.code), 25) + f.message;
        rstrip(line);
        out << line << '\n';
    }
    return out.str();
}

std::string render_text(const MatchReport& report, std::span<const FeasibilityFinding> findings) {
    std::ostringstream out;
    out << "catalog: " << report.catalog_version << "  profile: " << report.profile_digest << '\n';
    out << "summary: green: " << report.summary.green << "  yellow: " << report.summary.yellow
        << "  red: " << report.summary.red << '\n';
    for (const auto& v : report.verdicts) {
        std::string line = "  " + pad(v.device_id, 18) + pad(color_key(v.aggregate), 8) + "best=" +
                           pad(operator_key(v.best().limb), 11);
        std::string limbs;
        for (const auto& entry : v.per_limb) {
            if (!limbs.empty()) limbs += ',';
            limbs += operator_key(entry.limb);
            limbs += ':';
            limbs += color_key(entry.color);
        }
        line += pad(limbs, 32);
        for (std::size_t i = 0; i < v.rationale.size(); ++i) line += (i ? "; " : "") + v.rationale[i];
        rstrip(line);
        out << line << '\n';
    }
    if (!findings.empty()) {
        out << "findings:\n" << render_findings_text(findings);
    }
    return out.str();
}

std::string render_structured(const MatchReport& report, std::span<const FeasibilityFinding> findings) {
    detail::Json json = detail::report_to_json(report);
    json["findings"] = detail::findings_to_json(findings);
    return detail::dump(json);
}

std::string render_findings_structured(std::span<const FeasibilityFinding> findings) {
    return detail::dump(detail::Json{{"findings", detail::findings_to_json(findings)}});
}

StructuredReport parse_structured(std::string_view text) {
    const detail::Json json = detail::parse_json(text, "report");
    StructuredReport out;
    out.report = detail::report_from_json(json);
    if (auto it = json.find("findings"); it != json.end()) out.findings = detail::findings_from_json(*it);
    return out;
}

namespace detail {

namespace {

Json excess_to_json(const ExcessBreakdown& excess) {
    Json per = Json::object();
    for (const auto& [category, value] : excess.per_category) per[std::string(category_key(category))] = value;
    return Json{{"total", excess.total}, {"excess", std::move(per)}};
}

[[noreturn]] void malformed(const std::string& path, const std::string& message) {
    throw Error(ErrorKind::Malformed, path, message);
}

const Json& field(const Json& obj, const char* key, const std::string& base) {
    if (!obj.is_object()) malformed(base, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) malformed(join_path(base, key), "missing field");
    return *it;
}

std::string string_at(const Json& obj, const char* key, const std::string& base) {
    const Json& v = field(obj, key, base);
    if (!v.is_string()) malformed(join_path(base, key), "expected a string");
    return v.get<std::string>();
}

int int_at(const Json& obj, const char* key, const std::string& base) {
    const Json& v = field(obj, key, base);
    if (!v.is_number_integer()) malformed(join_path(base, key), "expected an integer");
    return v.get<int>();
}

Color color_at(const Json& obj, const std::string& base) {
    auto c = color_from_key(string_at(obj, "color", base));
    if (!c) malformed(join_path(base, "color"), "unknown color");
    return *c;
}

ExcessBreakdown excess_from_json(const Json& json, const std::string& base) {
    ExcessBreakdown out;
    const Json& per = field(json, "excess", base);
    if (!per.is_object()) malformed(join_path(base, "excess"), "expected an object");
    for (const auto& [key, value] : per.items()) {
        auto category = category_from_key(key);
        if (!category || !value.is_number_integer()) malformed(join_path(join_path(base, "excess"), key), "bad excess entry");
        out.per_category[*category] = value.get<int>();
    }
    out.total = int_at(json, "total", base);
    return out;
}

} // namespace

Json findings_to_json(std::span<const FeasibilityFinding> findings) {
    Json out = Json::array();
    for (const auto& f : findings) {
        out.push_back(Json{{"severity", severity_key(f.severity)}, {"code", finding_code_key(f.code)}, {"message", f.message}});
    }
    return out;
}

std::vector<FeasibilityFinding> findings_from_json(const Json& json) {
    if (!json.is_array()) malformed("findings", "expected an array");
    std::vector<FeasibilityFinding> out;
    for (std::size_t i = 0; i < json.size(); ++i) {
        const std::string base = index_path("findings", i);
        auto severity = severity_from_key(string_at(json[i], "severity", base));
        auto code = finding_code_from_key(string_at(json[i], "code", base));
        if (!severity) malformed(join_path(base, "severity"), "unknown severity");
        if (!code) malformed(join_path(base, "code"), "unknown finding code");
        out.push_back({*severity, *code, string_at(json[i], "message", base)});
    }
    return out;
}

Json report_to_json(const MatchReport& report) {
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
        Json per_limb = Json::object();
        for (const auto& entry : v.per_limb) {
            Json e = excess_to_json(entry.excess);
            Json limb{{"color", color_key(entry.color)}};
            limb.update(e);
            per_limb[std::string(operator_key(entry.limb))] = std::move(limb);
        }
        verdicts.push_back(Json{{"device_id", v.device_id},
                                {"device_name", v.device_name},
                                {"color", color_key(v.aggregate)},
                                {"best_limb", operator_key(v.best().limb)},
                                {"per_limb", std::move(per_limb)},
                                {"perception_excess", excess_to_json(v.perception_excess)},
                                {"rationale", v.rationale}});
    }
    return Json{{"catalog_version", report.catalog_version},
                {"profile_digest", report.profile_digest},
                {"summary", {{"green", report.summary.green}, {"yellow", report.summary.yellow}, {"red", report.summary.red}}},
                {"verdicts", std::move(verdicts)}};
}

MatchReport report_from_json(const Json& json) {
    MatchReport report;
    report.catalog_version = string_at(json, "catalog_version", "");
    report.profile_digest = string_at(json, "profile_digest", "");
    const Json& summary = field(json, "summary", "");
    report.summary.green = int_at(summary, "green", "summary");
    report.summary.yellow = int_at(summary, "yellow", "summary");
    report.summary.red = int_at(summary, "red", "summary");

    const Json& verdicts = field(json, "verdicts", "");
    if (!verdicts.is_array()) malformed("verdicts", "expected an array");
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const std::string base = index_path("verdicts", i);
        const Json& item = verdicts[i];
        DeviceVerdict v;
        v.device_id = string_at(item, "device_id", base);
        v.device_name = string_at(item, "device_name", base);
        v.aggregate = color_at(item, base);
        const Json& per_limb = field(item, "per_limb", base);
        if (!per_limb.is_object()) malformed(join_path(base, "per_limb"), "expected an object");
        for (const auto& [key, entry] : per_limb.items()) {
            const std::string path = join_path(join_path(base, "per_limb"), key);
            auto op = operator_from_key(key);
            if (!op) malformed(path, "unknown limb");
            v.per_limb.push_back({*op, color_at(entry, path), excess_from_json(entry, path)});
        }
        if (v.per_limb.empty()) malformed(join_path(base, "per_limb"), "no limb entries");
        v.perception_excess = excess_from_json(field(item, "perception_excess", base), join_path(base, "perception_excess"));
        const Json& rationale = field(item, "rationale", base);
        if (!rationale.is_array()) malformed(join_path(base, "rationale"), "expected an array");
        for (const auto& line : rationale) {
            if (!line.is_string()) malformed(join_path(base, "rationale"), "expected strings");
            v.rationale.push_back(line.get<std::string>());
        }
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

} // namespace detail

} // namespace devmatch
