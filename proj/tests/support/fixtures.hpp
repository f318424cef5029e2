#ifndef DEVMATCH_TESTS_FIXTURES_HPP
#define DEVMATCH_TESTS_FIXTURES_HPP

#include "devmatch/profile.hpp"

#include <random>
#include <string_view>

namespace fixtures {

// Tremor after a stroke: mild movement disturbance and limited mobility of
// the left hand only.
inline constexpr std::string_view kStrokeProfile = R"({
  "limbs": {
    "left_arm": {"movement_disturbance": 1, "mobility": 1}
  }
})";

// Parkinson's: partial vision limitation, every limb with limited mobility
// and severe movement disturbance.
inline constexpr std::string_view kParkinsonProfile = R"({
  "limbs": {
    "all_limbs": {"mobility": 1, "movement_disturbance": 2}
  },
  "perception": {"vision": 1}
})";

inline devmatch::DisabilityProfile stroke() { return devmatch::parse_profile(kStrokeProfile); }
inline devmatch::DisabilityProfile parkinson() { return devmatch::parse_profile(kParkinsonProfile); }

/// Uniformly random complete profile within the built-in scales.
inline devmatch::DisabilityProfile random_profile(std::mt19937& rng) {
    using namespace devmatch;
    DisabilityProfile p;
    for (LimbId limb : kAllLimbs) {
        for (Category c : kLimbCategories) {
            const int max = find_scale(default_scales(), c, limb.kind)->max_degree();
            p.set(limb, c, std::uniform_int_distribution<int>(0, max)(rng));
        }
    }
    for (Category c : kPerceptionCategories) p.set(c, std::uniform_int_distribution<int>(0, 2)(rng));
    return p;
}

/// A profile that is pointwise >= `base`, still within scale.
inline devmatch::DisabilityProfile dominating(const devmatch::DisabilityProfile& base, std::mt19937& rng) {
    using namespace devmatch;
    DisabilityProfile q = base;
    for (const auto& [slot, degree] : base.limb_degrees()) {
        const int max = find_scale(default_scales(), slot.second, slot.first.kind)->max_degree();
        q.set(slot.first, slot.second, std::uniform_int_distribution<int>(degree, max)(rng));
    }
    for (const auto& [category, degree] : base.perception_degrees()) {
        q.set(category, std::uniform_int_distribution<int>(degree, 2)(rng));
    }
    return q;
}

} // namespace fixtures

#endif // DEVMATCH_TESTS_FIXTURES_HPP
