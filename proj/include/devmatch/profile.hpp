#ifndef DEVMATCH_PROFILE_HPP
#define DEVMATCH_PROFILE_HPP

#include "devmatch/error.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace devmatch {

enum class Category : std::uint8_t {
    AmputationDysmelia,
    Mobility,
    Paralysis,
    MovementDisturbance,
    PressureSensitivity,
    Vision,
    Hearing,
};

enum class Applicability : std::uint8_t { Limb, Perception };

inline constexpr std::array<Category, 7> kAllCategories{
    Category::AmputationDysmelia, Category::Mobility,  Category::Paralysis,
    Category::MovementDisturbance, Category::PressureSensitivity,
    Category::Vision,             Category::Hearing,
};

inline constexpr std::array<Category, 5> kLimbCategories{
    Category::AmputationDysmelia, Category::Mobility, Category::Paralysis,
    Category::MovementDisturbance, Category::PressureSensitivity,
};

inline constexpr std::array<Category, 2> kPerceptionCategories{Category::Vision, Category::Hearing};

Applicability applicability(Category c) noexcept;

/// Document key, e.g. `movement_disturbance`.
std::string_view category_key(Category c) noexcept;
/// Human-readable name, e.g. `Disturbance of Movement Patterns`.
std::string_view category_name(Category c) noexcept;
std::optional<Category> category_from_key(std::string_view key) noexcept;

enum class Side : std::uint8_t { Left, Right };
enum class LimbKind : std::uint8_t { Arm, Leg };

struct LimbId {
    Side side;
    LimbKind kind;

    auto operator<=>(const LimbId&) const = default;
};

inline constexpr LimbId kLeftArm{Side::Left, LimbKind::Arm};
inline constexpr LimbId kRightArm{Side::Right, LimbKind::Arm};
inline constexpr LimbId kLeftLeg{Side::Left, LimbKind::Leg};
inline constexpr LimbId kRightLeg{Side::Right, LimbKind::Leg};
inline constexpr std::array<LimbId, 4> kAllLimbs{kLeftArm, kRightArm, kLeftLeg, kRightLeg};

std::string_view limb_key(LimbId limb) noexcept;
std::optional<LimbId> limb_from_key(std::string_view key) noexcept;
std::string_view limb_kind_key(LimbKind kind) noexcept;

struct DegreeLevel {
    int value;
    std::string label;

    bool operator==(const DegreeLevel&) const = default;
};

/// Ordinal severity scale for one category. Limb categories have separate
/// arm and leg scales; perception scales have no limb kind.
struct DegreeScale {
    Category category;
    std::optional<LimbKind> limb_kind;
    std::vector<DegreeLevel> levels;

    int max_degree() const noexcept { return static_cast<int>(levels.size()) - 1; }
    bool contains(int degree) const noexcept { return degree >= 0 && degree <= max_degree(); }

    bool operator==(const DegreeScale&) const = default;
};

/// The twelve built-in scales: five arm, five leg, vision and hearing.
const std::vector<DegreeScale>& default_scales();

const DegreeScale* find_scale(std::span<const DegreeScale> scales, Category category,
                              std::optional<LimbKind> kind) noexcept;

/// Number of degree slots in a complete profile (4 limbs x 5 + 2).
inline constexpr std::size_t kProfileSlotCount = kAllLimbs.size() * kLimbCategories.size() +
                                                 kPerceptionCategories.size();

/// Per-limb and per-sense disability degrees of one person. A profile is
/// complete once it has passed validate_profile(); queries on a missing slot
/// throw rather than assume a default.
class DisabilityProfile {
public:
    void set(LimbId limb, Category category, int degree);
    void set(Category perception, int degree);
    void erase(LimbId limb, Category category);
    void erase(Category perception);

    std::optional<int> find(LimbId limb, Category category) const;
    std::optional<int> find(Category perception) const;

    int degree(LimbId limb, Category category) const;
    int degree(Category perception) const;

    const std::map<std::pair<LimbId, Category>, int>& limb_degrees() const noexcept { return limbs_; }
    const std::map<Category, int>& perception_degrees() const noexcept { return perception_; }

    bool operator==(const DisabilityProfile&) const = default;

private:
    std::map<std::pair<LimbId, Category>, int> limbs_;
    std::map<Category, int> perception_;
};

DisabilityProfile zero_profile();

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

ValidationResult validate_profile(const DisabilityProfile& profile,
                                  std::span<const DegreeScale> scales);

/// Reads a profile document. Omitted slots default to 0. The keys
/// `all_arms`, `all_legs` and `all_limbs` expand to several limbs; a more
/// specific key overrides a broader one regardless of document order.
/// Throws Error (Malformed, UnknownKey or OutOfRange) with every violation.
DisabilityProfile parse_profile(std::string_view text);

/// Canonical document with every slot written out.
std::string serialize_profile(const DisabilityProfile& profile);

/// Stable short fingerprint of a profile's degrees, used to tag reports
/// without echoing health data.
std::string profile_digest(const DisabilityProfile& profile);

} // namespace devmatch

#endif // DEVMATCH_PROFILE_HPP
