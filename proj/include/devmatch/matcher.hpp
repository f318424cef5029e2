#ifndef DEVMATCH_MATCHER_HPP
#define DEVMATCH_MATCHER_HPP

#include "devmatch/catalog.hpp"
#include "devmatch/profile.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace devmatch {

/// Compatibility of a device with a person. Ordered best to worst.
enum class Color : std::uint8_t { Green, Yellow, Red };

inline constexpr std::array<Color, 3> kAllColors{Color::Green, Color::Yellow, Color::Red};

std::string_view color_key(Color c) noexcept;
std::optional<Color> color_from_key(std::string_view key) noexcept;

struct ExcessBreakdown {
    std::map<Category, int> per_category;  // only categories with positive excess
    int total = 0;

    void add(Category category, int excess);

    bool operator==(const ExcessBreakdown&) const = default;
};

/// Who operates a device: a concrete limb, or the whole body (nullopt) for
/// limb-independent and output devices.
using Operator = std::optional<LimbId>;

std::string_view operator_key(const Operator& op) noexcept;
std::optional<Operator> operator_from_key(std::string_view key) noexcept;

struct LimbVerdict {
    Operator limb;
    Color color{Color::Green};
    ExcessBreakdown excess;

    bool operator==(const LimbVerdict&) const = default;
};

struct DeviceVerdict {
    std::string device_id;
    std::string device_name;
    Color aggregate{Color::Green};
    std::vector<LimbVerdict> per_limb;
    ExcessBreakdown perception_excess;
    std::vector<std::string> rationale;

    /// First entry with the lowest total excess; this is the limb whose
    /// color becomes the aggregate.
    const LimbVerdict& best() const;

    bool operator==(const DeviceVerdict&) const = default;
};

struct ColorCounts {
    int green = 0;
    int yellow = 0;
    int red = 0;

    int& operator[](Color c) noexcept;
    int operator[](Color c) const noexcept;

    bool operator==(const ColorCounts&) const = default;
};

struct MatchReport {
    std::string profile_digest;
    std::string catalog_version;
    std::vector<DeviceVerdict> verdicts;
    ColorCounts summary;

    const DeviceVerdict* find(std::string_view device_id) const noexcept;

    bool operator==(const MatchReport&) const = default;
};

/// Amount by which a degree exceeds the cell's maximum; 0 when unconstrained.
int category_excess(int degree, RequirementCell cell) noexcept;

/// The limbs that may operate a device, in evaluation order. Arm-bound
/// devices yield both arms, leg-bound both legs, limb-independent devices a
/// single body entry.
std::vector<Operator> operating_limbs(const DeviceSpec& device);

/// Limb categories at the limb's degrees plus both perception categories.
/// Throws Error(Contract) if the limb cannot operate the device.
ExcessBreakdown limb_excess(const DisabilityProfile& profile, const DeviceSpec& device, LimbId limb);

/// Perception categories only.
ExcessBreakdown perception_excess(const DisabilityProfile& profile, const DeviceSpec& device);

/// Summed excess to color: 0 green, 1 yellow, 2 or more red.
Color classify(int excess_total) noexcept;

DeviceVerdict classify_device(const DisabilityProfile& profile, const DeviceSpec& device);

/// One verdict per device in catalog order. Throws Error(OutOfRange) when the
/// profile does not fit the catalog's scales.
MatchReport match_profile(const DisabilityProfile& profile, const Catalog& catalog);

} // namespace devmatch

#endif // DEVMATCH_MATCHER_HPP
