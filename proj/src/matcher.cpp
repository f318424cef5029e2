#include "devmatch/matcher.hpp"

#include <algorithm>

namespace devmatch {

std::string_view color_key(Color c) noexcept {
    switch (c) {
    case Color::Green: return "green";
    case Color::Yellow: return "yellow";
    case Color::Red: return "red";
    }
    return "";
}

std::optional<Color> color_from_key(std::string_view key) noexcept {
    for (Color c : kAllColors) {
        if (color_key(c) == key) return c;
    }
    return std::nullopt;
}

void ExcessBreakdown::add(Category category, int excess) {
    if (excess <= 0) return;
    per_category[category] += excess;
    total += excess;
}

std::string_view operator_key(const Operator& op) noexcept { return op ? limb_key(*op) : "body"; }

std::optional<Operator> operator_from_key(std::string_view key) noexcept {
    if (key == "body") return Operator{};
    if (auto limb = limb_from_key(key)) return Operator{*limb};
    return std::nullopt;
}

const LimbVerdict& DeviceVerdict::best() const {
    if (per_limb.empty()) throw Error(ErrorKind::Contract, device_id, "verdict has no limb entries");
    return *std::min_element(per_limb.begin(), per_limb.end(), [](const LimbVerdict& a, const LimbVerdict& b) {
        return a.excess.total < b.excess.total;
    });
}

int& ColorCounts::operator[](Color c) noexcept {
    switch (c) {
    case Color::Green: return green;
    case Color::Yellow: return yellow;
    case Color::Red: break;
    }
    return red;
}

int ColorCounts::operator[](Color c) const noexcept { return const_cast<ColorCounts&>(*this)[c]; }

const DeviceVerdict* MatchReport::find(std::string_view device_id) const noexcept {
    auto it = std::find_if(verdicts.begin(), verdicts.end(),
                           [&](const DeviceVerdict& v) { return v.device_id == device_id; });
    return it == verdicts.end() ? nullptr : &*it;
}

int category_excess(int degree, RequirementCell cell) noexcept {
    if (!cell.constrained()) return 0;
    return std::max(0, degree - cell.max());
}

std::vector<Operator> operating_limbs(const DeviceSpec& device) {
    std::vector<Operator> out;
    if (device.limb_independent()) {
        out.emplace_back(std::nullopt);
        return out;
    }
    for (LimbId limb : kAllLimbs) {
        if (device.operated_by(limb.kind)) out.emplace_back(limb);
    }
    return out;
}

ExcessBreakdown perception_excess(const DisabilityProfile& profile, const DeviceSpec& device) {
    ExcessBreakdown excess;
    for (Category c : kPerceptionCategories) {
        excess.add(c, category_excess(profile.degree(c), device.perception_cell(c)));
    }
    return excess;
}

ExcessBreakdown limb_excess(const DisabilityProfile& profile, const DeviceSpec& device, LimbId limb) {
    if (device.limb_independent() || !device.operated_by(limb.kind)) {
        throw Error(ErrorKind::Contract, device.id,
                    std::string(limb_key(limb)) + " cannot operate this device");
    }
    ExcessBreakdown excess = perception_excess(profile, device);
    for (Category c : kLimbCategories) {
        excess.add(c, category_excess(profile.degree(limb, c), device.cell(limb.kind, c)));
    }
    return excess;
}

Color classify(int excess_total) noexcept {
    if (excess_total <= 0) return Color::Green;
    if (excess_total == 1) return Color::Yellow;
    return Color::Red;
}

namespace {

std::string rationale_line(const DisabilityProfile& profile, const DeviceSpec& device, const Operator& op,
                           Category category, int excess) {
    int degree = 0;
    int max = 0;
    if (applicability(category) == Applicability::Perception) {
        degree = profile.degree(category);
        max = device.perception_cell(category).max();
    } else {
        degree = profile.degree(*op, category);
        max = device.cell(op->kind, category).max();
    }
    std::string line(operator_key(op));
    line += ": ";
    line += category_key(category);
    line += " degree " + std::to_string(degree) + " exceeds max " + std::to_string(max) + " by " +
            std::to_string(excess);
    return line;
}

} // namespace

DeviceVerdict classify_device(const DisabilityProfile& profile, const DeviceSpec& device) {
    DeviceVerdict verdict;
    verdict.device_id = device.id;
    verdict.device_name = device.display_name;
    verdict.perception_excess = perception_excess(profile, device);

    for (const Operator& op : operating_limbs(device)) {
        LimbVerdict entry;
        entry.limb = op;
        entry.excess = op ? limb_excess(profile, device, *op) : verdict.perception_excess;
        entry.color = classify(entry.excess.total);
        verdict.per_limb.push_back(std::move(entry));
    }

    const LimbVerdict& best = verdict.best();
    verdict.aggregate = best.color;
    for (const auto& [category, excess] : best.excess.per_category) {
        verdict.rationale.push_back(rationale_line(profile, device, best.limb, category, excess));
    }
    return verdict;
}

MatchReport match_profile(const DisabilityProfile& profile, const Catalog& catalog) {
    if (auto check = validate_profile(profile, catalog.scales()); !check.ok()) {
        throw Error(ErrorKind::OutOfRange, std::move(check.violations));
    }
    MatchReport report;
    report.profile_digest = profile_digest(profile);
    report.catalog_version = catalog.version();
    report.verdicts.reserve(catalog.devices().size());
    for (const auto& device : catalog.devices()) {
        report.verdicts.push_back(classify_device(profile, device));
        ++report.summary[report.verdicts.back().aggregate];
    }
    return report;
}

} // namespace devmatch
