#include "devmatch/process.hpp"

#include "devmatch/matcher.hpp"
#include "documents.hpp"

#include <algorithm>

namespace devmatch {

std::string_view process_type_key(ProcessType t) noexcept {
    return t == ProcessType::Sequential ? "sequential" : "flexible";
}

std::optional<ProcessType> process_type_from_key(std::string_view key) noexcept {
    if (key == "sequential") return ProcessType::Sequential;
    if (key == "flexible") return ProcessType::Flexible;
    return std::nullopt;
}

std::string_view severity_key(Severity s) noexcept { return s == Severity::Error ? "error" : "warning"; }

std::optional<Severity> severity_from_key(std::string_view key) noexcept {
    if (key == "error") return Severity::Error;
    if (key == "warning") return Severity::Warning;
    return std::nullopt;
}

std::string_view finding_code_key(FindingCode c) noexcept {
    switch (c) {
    case FindingCode::SafetyUnitMismatch: return "SAFETY_UNIT_MISMATCH";
    case FindingCode::MissingBasicStructure: return "MISSING_BASIC_STRUCTURE";
    case FindingCode::InputClassUnsatisfied: return "INPUT_CLASS_UNSATISFIED";
    case FindingCode::InputClassOnlyYellow: return "INPUT_CLASS_ONLY_YELLOW";
    case FindingCode::NoOutputDevice: return "NO_OUTPUT_DEVICE";
    case FindingCode::TwoSensesNotMet: return "TWO_SENSES_NOT_MET";
    case FindingCode::SenseUnavailable: return "SENSE_UNAVAILABLE";
    }
    return "";
}

std::optional<FindingCode> finding_code_from_key(std::string_view key) noexcept {
    for (FindingCode c : kAllFindingCodes) {
        if (finding_code_key(c) == key) return c;
    }
    return std::nullopt;
}

Severity severity_of(FindingCode c) noexcept {
    switch (c) {
    case FindingCode::SafetyUnitMismatch:
    case FindingCode::MissingBasicStructure:
    case FindingCode::InputClassUnsatisfied: return Severity::Error;
    default: return Severity::Warning;
    }
}

bool has_errors(std::span<const FeasibilityFinding> findings) noexcept {
    return std::any_of(findings.begin(), findings.end(),
                       [](const FeasibilityFinding& f) { return f.severity == Severity::Error; });
}

std::set<DeviceClass> required_input_classes(ProcessType t) {
    if (t == ProcessType::Sequential) return {DeviceClass::OneDimensionalInput};
    return {DeviceClass::MultiDimensionalInput};
}

bool satisfies(DeviceClass provided, DeviceClass required) noexcept {
    if (provided == required) return true;
    return provided == DeviceClass::MultiDimensionalInput && required == DeviceClass::OneDimensionalInput;
}

namespace {

FeasibilityFinding finding(FindingCode code, std::string message) {
    return {severity_of(code), code, std::move(message)};
}

std::string class_name(DeviceClass c) {
    switch (c) {
    case DeviceClass::OneDimensionalInput: return "one-dimensional input";
    case DeviceClass::MultiDimensionalInput: return "multi-dimensional input";
    case DeviceClass::Output: return "output";
    }
    return "";
}

} // namespace

std::vector<FeasibilityFinding> check_two_senses(std::span<const DeviceSpec> selected,
                                                 const DisabilityProfile& profile) {
    std::vector<FeasibilityFinding> findings;
    struct Sense {
        OutputModality modality;
        Category perception;
    };
    constexpr Sense senses[]{{OutputModality::Visual, Category::Vision},
                             {OutputModality::Auditory, Category::Hearing}};

    int effective = 0;
    for (const Sense& sense : senses) {
        const bool unavailable = profile.degree(sense.perception) >= kTotalPerceptionLimitation;
        if (unavailable) {
            findings.push_back(finding(FindingCode::SenseUnavailable,
                                       std::string(modality_key(sense.modality)) + " output cannot be perceived (" +
                                           std::string(category_key(sense.perception)) + " totally limited)"));
            continue;
        }
        const bool covered = std::any_of(selected.begin(), selected.end(), [&](const DeviceSpec& d) {
            return d.device_class == DeviceClass::Output && d.modality == sense.modality;
        });
        if (covered) ++effective;
    }
    if (effective < 2) {
        findings.push_back(finding(FindingCode::TwoSensesNotMet,
                                   "output devices reach " + std::to_string(effective) +
                                       " usable sense(s); visual and auditory are both needed"));
    }
    return findings;
}

std::vector<FeasibilityFinding> validate_workstation(const WorkstationPlan& plan, const Catalog& catalog,
                                                     const DisabilityProfile& profile) {
    std::vector<DeviceSpec> selected;
    std::vector<Violation> unknown;
    for (std::size_t i = 0; i < plan.device_ids.size(); ++i) {
        if (const DeviceSpec* d = catalog.find(plan.device_ids[i])) {
            selected.push_back(*d);
        } else {
            unknown.push_back({detail::index_path("devices", i), "unknown device id '" + plan.device_ids[i] + "'"});
        }
    }
    if (!unknown.empty()) throw Error(ErrorKind::UnknownDevice, std::move(unknown));

    std::vector<FeasibilityFinding> findings;
    if (plan.safety_units != plan.action_units) {
        findings.push_back(finding(FindingCode::SafetyUnitMismatch,
                                   std::to_string(plan.action_units) + " action unit(s) but " +
                                       std::to_string(plan.safety_units) + " safety unit(s)"));
    }
    if (!plan.has_work_table || !plan.has_computer) {
        std::string missing;
        if (!plan.has_work_table) missing = "work table";
        if (!plan.has_computer) missing += missing.empty() ? "computer" : " and computer";
        findings.push_back(finding(FindingCode::MissingBasicStructure, "basic structure lacks " + missing));
    }

    std::vector<Color> colors;
    colors.reserve(selected.size());
    for (const auto& d : selected) colors.push_back(classify_device(profile, d).aggregate);

    for (DeviceClass required : required_input_classes(plan.process_type)) {
        bool green = false;
        bool yellow = false;
        for (std::size_t i = 0; i < selected.size(); ++i) {
            if (!satisfies(selected[i].device_class, required)) continue;
            green = green || colors[i] == Color::Green;
            yellow = yellow || colors[i] == Color::Yellow;
        }
        if (green) continue;
        findings.push_back(finding(FindingCode::InputClassUnsatisfied,
                                   std::string(process_type_key(plan.process_type)) + " process needs a green " +
                                       class_name(required) + " device"));
        if (yellow) {
            findings.push_back(finding(FindingCode::InputClassOnlyYellow,
                                       "a yellow " + class_name(required) +
                                           " device is selected; designer validation required"));
        }
    }

    const bool any_output = std::any_of(selected.begin(), selected.end(),
                                        [](const DeviceSpec& d) { return d.device_class == DeviceClass::Output; });
    if (!any_output) findings.push_back(finding(FindingCode::NoOutputDevice, "no output device selected"));

    auto senses = check_two_senses(selected, profile);
    findings.insert(findings.end(), senses.begin(), senses.end());
    return findings;
}

WorkstationPlan parse_plan(std::string_view text) { return detail::plan_from_json(detail::parse_json(text, "plan")); }

std::string serialize_plan(const WorkstationPlan& plan) { return detail::dump(detail::plan_to_json(plan)); }

namespace detail {

Json plan_to_json(const WorkstationPlan& plan) {
    return Json{{"process_type", process_type_key(plan.process_type)},
                {"action_units", plan.action_units},
                {"safety_units", plan.safety_units},
                {"devices", plan.device_ids},
                {"work_table", plan.has_work_table},
                {"computer", plan.has_computer}};
}

WorkstationPlan plan_from_json(const Json& json) {
    ViolationSink sink;
    WorkstationPlan plan;
    if (!json.is_object()) {
        sink.add(ErrorKind::Malformed, "", "plan must be an object");
        sink.throw_if_any();
    }
    static const std::set<std::string> known{"process_type", "action_units", "safety_units",
                                             "devices",      "work_table",   "computer"};
    for (const auto& [key, value] : json.items()) {
        if (!known.contains(key)) sink.add(ErrorKind::UnknownKey, key, "unknown field '" + key + "'");
    }
    for (const auto& key : known) {
        if (!json.contains(key)) sink.add(ErrorKind::Malformed, key, "missing field");
    }

    if (auto it = json.find("process_type"); it != json.end()) {
        auto type = it->is_string() ? process_type_from_key(it->get<std::string>()) : std::nullopt;
        if (type) {
            plan.process_type = *type;
        } else {
            sink.add(ErrorKind::Malformed, "process_type", "expected \"sequential\" or \"flexible\"");
        }
    }
    auto read_count = [&](const char* key, int minimum, int& out) {
        auto it = json.find(key);
        if (it == json.end()) return;
        if (!it->is_number_integer()) {
            sink.add(ErrorKind::Malformed, key, "expected an integer");
        } else if (it->get<long long>() < minimum) {
            sink.add(ErrorKind::OutOfRange, key, "must be at least " + std::to_string(minimum));
        } else {
            out = it->get<int>();
        }
    };
    read_count("action_units", 1, plan.action_units);
    read_count("safety_units", 0, plan.safety_units);

    if (auto it = json.find("devices"); it != json.end()) {
        if (!it->is_array()) {
            sink.add(ErrorKind::Malformed, "devices", "expected an array of device ids");
        } else {
            plan.device_ids.clear();
            for (std::size_t i = 0; i < it->size(); ++i) {
                if ((*it)[i].is_string()) {
                    plan.device_ids.push_back((*it)[i].get<std::string>());
                } else {
                    sink.add(ErrorKind::Malformed, index_path("devices", i), "expected a string");
                }
            }
        }
    }
    auto read_flag = [&](const char* key, bool& out) {
        auto it = json.find(key);
        if (it == json.end()) return;
        if (it->is_boolean()) {
            out = it->get<bool>();
        } else {
            sink.add(ErrorKind::Malformed, key, "expected true or false");
        }
    };
    read_flag("work_table", plan.has_work_table);
    read_flag("computer", plan.has_computer);

    sink.throw_if_any();
    return plan;
}

} // namespace detail

} // namespace devmatch
