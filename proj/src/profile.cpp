#include "devmatch/profile.hpp"

#include "documents.hpp"

#include <algorithm>
#include <cstdio>

namespace devmatch {

Applicability applicability(Category c) noexcept {
    return (c == Category::Vision || c == Category::Hearing) ? Applicability::Perception
                                                             : Applicability::Limb;
}

std::string_view category_key(Category c) noexcept {
    switch (c) {
    case Category::AmputationDysmelia: return "amputation_dysmelia";
    case Category::Mobility: return "mobility";
    case Category::Paralysis: return "paralysis";
    case Category::MovementDisturbance: return "movement_disturbance";
    case Category::PressureSensitivity: return "pressure_sensitivity";
    case Category::Vision: return "vision";
    case Category::Hearing: return "hearing";
    }
    return "";
}

std::string_view category_name(Category c) noexcept {
    switch (c) {
    case Category::AmputationDysmelia: return "Amputation & Dysmelia";
    case Category::Mobility: return "Mobility of Limbs";
    case Category::Paralysis: return "Paralysis";
    case Category::MovementDisturbance: return "Disturbance of Movement Patterns";
    case Category::PressureSensitivity: return "Sensitivity to Pressure";
    case Category::Vision: return "Vision";
    case Category::Hearing: return "Hearing";
    }
    return "";
}

std::optional<Category> category_from_key(std::string_view key) noexcept {
    for (Category c : kAllCategories) {
        if (category_key(c) == key) return c;
    }
    return std::nullopt;
}

std::string_view limb_key(LimbId limb) noexcept {
    if (limb.kind == LimbKind::Arm) return limb.side == Side::Left ? "left_arm" : "right_arm";
    return limb.side == Side::Left ? "left_leg" : "right_leg";
}

std::optional<LimbId> limb_from_key(std::string_view key) noexcept {
    for (LimbId limb : kAllLimbs) {
        if (limb_key(limb) == key) return limb;
    }
    return std::nullopt;
}

std::string_view limb_kind_key(LimbKind kind) noexcept { return kind == LimbKind::Arm ? "arm" : "leg"; }

namespace {

DegreeScale make_scale(Category category, std::optional<LimbKind> kind,
                       std::initializer_list<const char*> labels) {
    DegreeScale scale{category, kind, {}};
    int value = 0;
    for (const char* label : labels) scale.levels.push_back({value++, label});
    return scale;
}

std::vector<DegreeScale> build_default_scales() {
    using C = Category;
    const auto arm = LimbKind::Arm;
    const auto leg = LimbKind::Leg;
    return {
        make_scale(C::AmputationDysmelia, arm,
                   {"no limitation", "from 4 fingers", "all fingers", "from the hand",
                    "from parts of the upper arm"}),
        make_scale(C::Mobility, arm,
                   {"no limitation", "limited mobility of the hand", "limited mobility of the arm"}),
        make_scale(C::Paralysis, arm, {"no limitation", "paralysis of the hand", "paralysis of the arm"}),
        make_scale(C::MovementDisturbance, arm, {"no disturbance", "mild disturbance", "severe disturbance"}),
        make_scale(C::PressureSensitivity, arm, {"no limitation", "moderate", "severe"}),

        make_scale(C::AmputationDysmelia, leg, {"no limitation", "foot", "from parts of the lower leg"}),
        make_scale(C::Mobility, leg,
                   {"no limitation", "slightly limited mobility", "severely limited mobility"}),
        make_scale(C::Paralysis, leg, {"no limitation", "paralysis of the foot", "paralysis of the leg"}),
        make_scale(C::MovementDisturbance, leg, {"no disturbance", "mild disturbance", "severe disturbance"}),
        make_scale(C::PressureSensitivity, leg, {"no limitation", "moderate", "severe"}),

        make_scale(C::Vision, std::nullopt, {"no limitation", "partial limitation", "total limitation"}),
        make_scale(C::Hearing, std::nullopt, {"no limitation", "partial limitation", "total limitation"}),
    };
}

std::string scale_name(Category category, std::optional<LimbKind> kind) {
    std::string name;
    if (kind) {
        name += limb_kind_key(*kind);
        name += ' ';
    }
    name += category_name(category);
    return name;
}

std::string range_message(int degree, const DegreeScale& scale) {
    return "degree " + std::to_string(degree) + " out of range for " +
           scale_name(scale.category, scale.limb_kind) + " scale (0.." +
           std::to_string(scale.max_degree()) + ")";
}

} // namespace

const std::vector<DegreeScale>& default_scales() {
    static const std::vector<DegreeScale> scales = build_default_scales();
    return scales;
}

const DegreeScale* find_scale(std::span<const DegreeScale> scales, Category category,
                              std::optional<LimbKind> kind) noexcept {
    if (applicability(category) == Applicability::Perception) kind.reset();
    auto it = std::find_if(scales.begin(), scales.end(), [&](const DegreeScale& s) {
        return s.category == category && s.limb_kind == kind;
    });
    return it == scales.end() ? nullptr : &*it;
}

void DisabilityProfile::set(LimbId limb, Category category, int degree) {
    if (applicability(category) != Applicability::Limb) {
        throw Error(ErrorKind::Contract, std::string(category_key(category)),
                    "not a limb category");
    }
    limbs_[{limb, category}] = degree;
}

void DisabilityProfile::set(Category perception, int degree) {
    if (applicability(perception) != Applicability::Perception) {
        throw Error(ErrorKind::Contract, std::string(category_key(perception)),
                    "not a perception category");
    }
    perception_[perception] = degree;
}

void DisabilityProfile::erase(LimbId limb, Category category) { limbs_.erase({limb, category}); }

void DisabilityProfile::erase(Category perception) { perception_.erase(perception); }

std::optional<int> DisabilityProfile::find(LimbId limb, Category category) const {
    auto it = limbs_.find({limb, category});
    if (it == limbs_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> DisabilityProfile::find(Category perception) const {
    auto it = perception_.find(perception);
    if (it == perception_.end()) return std::nullopt;
    return it->second;
}

int DisabilityProfile::degree(LimbId limb, Category category) const {
    if (auto d = find(limb, category)) return *d;
    throw Error(ErrorKind::Contract,
                std::string(limb_key(limb)) + "." + std::string(category_key(category)),
                "profile slot is missing");
}

int DisabilityProfile::degree(Category perception) const {
    if (auto d = find(perception)) return *d;
    throw Error(ErrorKind::Contract, "perception." + std::string(category_key(perception)),
                "profile slot is missing");
}

DisabilityProfile zero_profile() {
    DisabilityProfile p;
    for (LimbId limb : kAllLimbs) {
        for (Category c : kLimbCategories) p.set(limb, c, 0);
    }
    for (Category c : kPerceptionCategories) p.set(c, 0);
    return p;
}

ValidationResult validate_profile(const DisabilityProfile& profile, std::span<const DegreeScale> scales) {
    ValidationResult result;
    auto check = [&](std::string path, std::optional<int> degree, Category category,
                     std::optional<LimbKind> kind) {
        const DegreeScale* scale = find_scale(scales, category, kind);
        if (scale == nullptr) {
            result.violations.push_back({path, "no scale for " + scale_name(category, kind)});
        } else if (!degree) {
            result.violations.push_back({path, "missing degree"});
        } else if (!scale->contains(*degree)) {
            result.violations.push_back({path, range_message(*degree, *scale)});
        }
    };
    for (LimbId limb : kAllLimbs) {
        for (Category c : kLimbCategories) {
            check("limbs." + std::string(limb_key(limb)) + "." + std::string(category_key(c)),
                  profile.find(limb, c), c, limb.kind);
        }
    }
    for (Category c : kPerceptionCategories) {
        check("perception." + std::string(category_key(c)), profile.find(c), c, std::nullopt);
    }
    return result;
}

DisabilityProfile parse_profile(std::string_view text) {
    return detail::profile_from_json(detail::parse_json(text, "profile"));
}

std::string serialize_profile(const DisabilityProfile& profile) {
    return detail::dump(detail::profile_to_json(profile));
}

std::string profile_digest(const DisabilityProfile& profile) {
    // FNV-1a, 64 bit
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : detail::profile_to_json(profile).dump()) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace detail {

Json profile_to_json(const DisabilityProfile& profile) {
    Json limbs = Json::object();
    for (LimbId limb : kAllLimbs) {
        Json entry = Json::object();
        for (Category c : kLimbCategories) {
            if (auto d = profile.find(limb, c)) entry[std::string(category_key(c))] = *d;
        }
        limbs[std::string(limb_key(limb))] = std::move(entry);
    }
    Json perception = Json::object();
    for (Category c : kPerceptionCategories) {
        if (auto d = profile.find(c)) perception[std::string(category_key(c))] = *d;
    }
    return Json{{"limbs", std::move(limbs)}, {"perception", std::move(perception)}};
}

namespace {

// Broader limb selectors are applied first so specific limbs override them.
struct LimbSelector {
    std::string_view key;
    int precedence;
    std::vector<LimbId> limbs;
};

const std::vector<LimbSelector>& limb_selectors() {
    static const std::vector<LimbSelector> selectors{
        {"all_limbs", 0, {kAllLimbs.begin(), kAllLimbs.end()}},
        {"all_arms", 1, {kLeftArm, kRightArm}},
        {"all_legs", 1, {kLeftLeg, kRightLeg}},
        {"left_arm", 2, {kLeftArm}},
        {"right_arm", 2, {kRightArm}},
        {"left_leg", 2, {kLeftLeg}},
        {"right_leg", 2, {kRightLeg}},
    };
    return selectors;
}

std::optional<int> read_degree(const Json& value, const std::string& path, ViolationSink& sink) {
    if (!value.is_number_integer()) {
        sink.add(ErrorKind::Malformed, path, "expected an integer degree");
        return std::nullopt;
    }
    return value.get<int>();
}

} // namespace

DisabilityProfile profile_from_json(const Json& json) {
    ViolationSink sink;
    DisabilityProfile profile = zero_profile();
    if (!json.is_object()) {
        sink.add(ErrorKind::Malformed, "", "profile must be an object");
        sink.throw_if_any();
    }

    struct Assignment {
        int precedence;
        std::vector<LimbId> limbs;
        Category category;
        int degree;
        std::string path;
    };
    std::vector<Assignment> assignments;

    for (const auto& [key, value] : json.items()) {
        if (key == "limbs") {
            if (!value.is_object()) {
                sink.add(ErrorKind::Malformed, "limbs", "expected an object");
                continue;
            }
            for (const auto& [limb_name, categories] : value.items()) {
                const std::string limb_path = join_path("limbs", limb_name);
                const auto& selectors = limb_selectors();
                auto sel = std::find_if(selectors.begin(), selectors.end(),
                                        [&](const LimbSelector& s) { return s.key == limb_name; });
                if (sel == selectors.end()) {
                    sink.add(ErrorKind::UnknownKey, limb_path, "unknown limb '" + limb_name + "'");
                    continue;
                }
                if (!categories.is_object()) {
                    sink.add(ErrorKind::Malformed, limb_path, "expected an object");
                    continue;
                }
                for (const auto& [cat_name, degree_value] : categories.items()) {
                    const std::string path = join_path(limb_path, cat_name);
                    auto category = category_from_key(cat_name);
                    if (!category || applicability(*category) != Applicability::Limb) {
                        sink.add(ErrorKind::UnknownKey, path, "unknown limb category '" + cat_name + "'");
                        continue;
                    }
                    auto degree = read_degree(degree_value, path, sink);
                    if (!degree) continue;
                    assignments.push_back({sel->precedence, sel->limbs, *category, *degree, path});
                }
            }
        } else if (key == "perception") {
            if (!value.is_object()) {
                sink.add(ErrorKind::Malformed, "perception", "expected an object");
                continue;
            }
            for (const auto& [cat_name, degree_value] : value.items()) {
                const std::string path = join_path("perception", cat_name);
                auto category = category_from_key(cat_name);
                if (!category || applicability(*category) != Applicability::Perception) {
                    sink.add(ErrorKind::UnknownKey, path, "unknown perception category '" + cat_name + "'");
                    continue;
                }
                auto degree = read_degree(degree_value, path, sink);
                if (!degree) continue;
                const DegreeScale* scale = find_scale(default_scales(), *category, std::nullopt);
                if (!scale->contains(*degree)) {
                    sink.add(ErrorKind::OutOfRange, path, range_message(*degree, *scale));
                    continue;
                }
                profile.set(*category, *degree);
            }
        } else {
            sink.add(ErrorKind::UnknownKey, key, "unknown key '" + key + "'");
        }
    }

    std::stable_sort(assignments.begin(), assignments.end(),
                     [](const Assignment& a, const Assignment& b) { return a.precedence < b.precedence; });
    for (const auto& a : assignments) {
        // A shorthand spanning arms and legs is checked against each limb's own scale.
        bool in_range = true;
        for (LimbId limb : a.limbs) {
            const DegreeScale* scale = find_scale(default_scales(), a.category, limb.kind);
            if (!scale->contains(a.degree)) {
                sink.add(ErrorKind::OutOfRange, a.path, range_message(a.degree, *scale));
                in_range = false;
                break;
            }
        }
        if (!in_range) continue;
        for (LimbId limb : a.limbs) profile.set(limb, a.category, a.degree);
    }

    sink.throw_if_any();
    return profile;
}

} // namespace detail

} // namespace devmatch
