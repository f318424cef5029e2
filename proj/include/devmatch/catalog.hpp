#ifndef DEVMATCH_CATALOG_HPP
#define DEVMATCH_CATALOG_HPP

#include "devmatch/profile.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace devmatch {

enum class DeviceClass : std::uint8_t { OneDimensionalInput, MultiDimensionalInput, Output };
enum class OutputModality : std::uint8_t { Visual, Auditory };

std::string_view device_class_key(DeviceClass c) noexcept;
std::optional<DeviceClass> device_class_from_key(std::string_view key) noexcept;
std::string_view modality_key(OutputModality m) noexcept;
std::optional<OutputModality> modality_from_key(std::string_view key) noexcept;

/// Highest degree of a category at which a device can still be operated.
/// An unconstrained cell means the category has no bearing on the device.
class RequirementCell {
public:
    static constexpr RequirementCell unconstrained() noexcept { return RequirementCell{}; }
    static constexpr RequirementCell max_degree(int value) noexcept { return RequirementCell{value}; }

    constexpr bool constrained() const noexcept { return max_.has_value(); }
    constexpr int max() const { return max_.value(); }

    constexpr bool operator==(const RequirementCell&) const = default;

private:
    constexpr RequirementCell() = default;
    constexpr explicit RequirementCell(int value) : max_{value} {}

    std::optional<int> max_;
};

/// Sparse requirement row: absent categories are unconstrained.
using RequirementMap = std::map<Category, int>;

struct DeviceSpec {
    std::string id;
    std::string display_name;
    DeviceClass device_class{DeviceClass::OneDimensionalInput};
    std::optional<OutputModality> modality;
    RequirementMap arm;
    RequirementMap leg;
    RequirementMap perception;

    RequirementCell cell(LimbKind kind, Category category) const;
    RequirementCell perception_cell(Category category) const;

    /// True when no limb cell is constrained: the device is not worked by an
    /// arm or a leg (mouth mouse, every output device).
    bool limb_independent() const noexcept { return arm.empty() && leg.empty(); }
    /// An arm or leg can operate the device only if the device constrains that
    /// limb kind somewhere.
    bool operated_by(LimbKind kind) const noexcept;

    bool operator==(const DeviceSpec&) const = default;
};

class Catalog {
public:
    Catalog() = default;
    /// Validates and takes ownership; throws Error on the first rule broken
    /// by any device (collecting all violations).
    Catalog(std::string version, std::vector<DegreeScale> scales, std::vector<DeviceSpec> devices);

    const std::string& version() const noexcept { return version_; }
    const std::vector<DegreeScale>& scales() const noexcept { return scales_; }
    const std::vector<DeviceSpec>& devices() const noexcept { return devices_; }

    const DeviceSpec* find(std::string_view id) const noexcept;

    bool operator==(const Catalog&) const = default;

private:
    std::string version_;
    std::vector<DegreeScale> scales_;
    std::vector<DeviceSpec> devices_;
};

/// The fourteen-device requirement matrix shipped with the tool.
const Catalog& default_catalog();

/// Strict reader: unknown keys anywhere are rejected. Scales are the
/// built-in ones.
Catalog load_catalog(std::string_view text);
std::string serialize_catalog(const Catalog& catalog);

std::vector<DeviceSpec> list_devices(const Catalog& catalog,
                                     std::optional<DeviceClass> filter = std::nullopt);

} // namespace devmatch

#endif // DEVMATCH_CATALOG_HPP
