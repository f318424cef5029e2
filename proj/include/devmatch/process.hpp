#ifndef DEVMATCH_PROCESS_HPP
#define DEVMATCH_PROCESS_HPP

#include "devmatch/catalog.hpp"
#include "devmatch/profile.hpp"

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace devmatch {

enum class ProcessType : std::uint8_t { Sequential, Flexible };

std::string_view process_type_key(ProcessType t) noexcept;
std::optional<ProcessType> process_type_from_key(std::string_view key) noexcept;

/// A workstation: basic structure (work table and computer), n action units
/// each paired with a safety unit, and the chosen I/O devices.
struct WorkstationPlan {
    ProcessType process_type{ProcessType::Sequential};
    int action_units = 1;
    int safety_units = 1;
    std::vector<std::string> device_ids;
    bool has_work_table = true;
    bool has_computer = true;

    bool operator==(const WorkstationPlan&) const = default;
};

enum class Severity : std::uint8_t { Error, Warning };

enum class FindingCode : std::uint8_t {
    SafetyUnitMismatch,
    MissingBasicStructure,
    InputClassUnsatisfied,
    InputClassOnlyYellow,
    NoOutputDevice,
    TwoSensesNotMet,
    SenseUnavailable,
};

inline constexpr std::array<FindingCode, 7> kAllFindingCodes{
    FindingCode::SafetyUnitMismatch,  FindingCode::MissingBasicStructure,
    FindingCode::InputClassUnsatisfied, FindingCode::InputClassOnlyYellow,
    FindingCode::NoOutputDevice,      FindingCode::TwoSensesNotMet,
    FindingCode::SenseUnavailable,
};

std::string_view severity_key(Severity s) noexcept;
std::optional<Severity> severity_from_key(std::string_view key) noexcept;
std::string_view finding_code_key(FindingCode c) noexcept;
std::optional<FindingCode> finding_code_from_key(std::string_view key) noexcept;
Severity severity_of(FindingCode c) noexcept;

struct FeasibilityFinding {
    Severity severity{Severity::Warning};
    FindingCode code{FindingCode::NoOutputDevice};
    std::string message;

    bool operator==(const FeasibilityFinding&) const = default;
};

bool has_errors(std::span<const FeasibilityFinding> findings) noexcept;

std::set<DeviceClass> required_input_classes(ProcessType t);

/// Multi-dimensional input devices also serve as one-dimensional ones.
bool satisfies(DeviceClass provided, DeviceClass required) noexcept;

/// Degree at which a sense counts as unavailable.
inline constexpr int kTotalPerceptionLimitation = 2;

std::vector<FeasibilityFinding> check_two_senses(std::span<const DeviceSpec> selected,
                                                 const DisabilityProfile& profile);

/// Throws Error(UnknownDevice) if the plan names a device the catalog lacks.
std::vector<FeasibilityFinding> validate_workstation(const WorkstationPlan& plan,
                                                     const Catalog& catalog,
                                                     const DisabilityProfile& profile);

WorkstationPlan parse_plan(std::string_view text);
std::string serialize_plan(const WorkstationPlan& plan);

} // namespace devmatch

#endif // DEVMATCH_PROCESS_HPP
