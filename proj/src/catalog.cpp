#include "devmatch/catalog.hpp"

#include "documents.hpp"

#include <algorithm>
#include <set>

namespace devmatch {

std::string_view device_class_key(DeviceClass c) noexcept {
    switch (c) {
    case DeviceClass::OneDimensionalInput: return "one_dim_input";
    case DeviceClass::MultiDimensionalInput: return "multi_dim_input";
    case DeviceClass::Output: return "output";
    }
    return "";
}

std::optional<DeviceClass> device_class_from_key(std::string_view key) noexcept {
    for (auto c : {DeviceClass::OneDimensionalInput, DeviceClass::MultiDimensionalInput, DeviceClass::Output}) {
        if (device_class_key(c) == key) return c;
    }
    return std::nullopt;
}

std::string_view modality_key(OutputModality m) noexcept {
    return m == OutputModality::Visual ? "visual" : "auditory";
}

std::optional<OutputModality> modality_from_key(std::string_view key) noexcept {
    if (key == "visual") return OutputModality::Visual;
    if (key == "auditory") return OutputModality::Auditory;
    return std::nullopt;
}

namespace {

RequirementCell lookup(const RequirementMap& row, Category category) {
    auto it = row.find(category);
    return it == row.end() ? RequirementCell::unconstrained() : RequirementCell::max_degree(it->second);
}

} // namespace

RequirementCell DeviceSpec::cell(LimbKind kind, Category category) const {
    return lookup(kind == LimbKind::Arm ? arm : leg, category);
}

RequirementCell DeviceSpec::perception_cell(Category category) const { return lookup(perception, category); }

bool DeviceSpec::operated_by(LimbKind kind) const noexcept {
    return !(kind == LimbKind::Arm ? arm : leg).empty();
}

Catalog::Catalog(std::string version, std::vector<DegreeScale> scales, std::vector<DeviceSpec> devices)
    : version_(std::move(version)), scales_(std::move(scales)), devices_(std::move(devices)) {
    detail::ViolationSink sink;
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < devices_.size(); ++i) {
        const DeviceSpec& d = devices_[i];
        const std::string base = detail::index_path("devices", i);
        if (d.id.empty()) sink.add(ErrorKind::InvalidDevice, detail::join_path(base, "id"), "empty device id");
        if (!seen.insert(d.id).second) {
            sink.add(ErrorKind::DuplicateId, detail::join_path(base, "id"), "duplicate device id '" + d.id + "'");
        }

        const bool output = d.device_class == DeviceClass::Output;
        if (output && !d.modality) {
            sink.add(ErrorKind::InvalidDevice, detail::join_path(base, "modality"),
                     "output device '" + d.id + "' needs a modality");
        }
        if (!output && d.modality) {
            sink.add(ErrorKind::InvalidDevice, detail::join_path(base, "modality"),
                     "input device '" + d.id + "' cannot have a modality");
        }
        if (output && !d.limb_independent()) {
            sink.add(ErrorKind::InvalidDevice, base, "output device '" + d.id + "' has a limb constraint");
        }

        auto check_row = [&](const RequirementMap& row, std::string_view row_key, Applicability expected,
                             std::optional<LimbKind> kind) {
            for (const auto& [category, max] : row) {
                const std::string path =
                    detail::join_path(detail::join_path(base, row_key), category_key(category));
                if (applicability(category) != expected) {
                    sink.add(ErrorKind::UnknownKey, path, "category not allowed here");
                    continue;
                }
                const DegreeScale* scale = find_scale(scales_, category, kind);
                if (scale == nullptr) {
                    sink.add(ErrorKind::OutOfRange, path, "no scale for this category");
                } else if (!scale->contains(max)) {
                    sink.add(ErrorKind::OutOfRange, path,
                             "max degree " + std::to_string(max) + " outside scale 0.." +
                                 std::to_string(scale->max_degree()));
                }
            }
        };
        check_row(d.arm, "arm", Applicability::Limb, LimbKind::Arm);
        check_row(d.leg, "leg", Applicability::Limb, LimbKind::Leg);
        check_row(d.perception, "perception", Applicability::Perception, std::nullopt);
    }
    sink.throw_if_any();
}

const DeviceSpec* Catalog::find(std::string_view id) const noexcept {
    auto it = std::find_if(devices_.begin(), devices_.end(), [&](const DeviceSpec& d) { return d.id == id; });
    return it == devices_.end() ? nullptr : &*it;
}

namespace {

using C = Category;
constexpr auto A = C::AmputationDysmelia;
constexpr auto M = C::Mobility;
constexpr auto P = C::Paralysis;
constexpr auto D = C::MovementDisturbance;
constexpr auto S = C::PressureSensitivity;

DeviceSpec input(std::string id, std::string name, DeviceClass cls, RequirementMap arm, RequirementMap leg,
                 RequirementMap perception = {}) {
    return {std::move(id), std::move(name), cls, std::nullopt, std::move(arm), std::move(leg), std::move(perception)};
}

DeviceSpec output(std::string id, std::string name, OutputModality modality, RequirementMap perception) {
    return {std::move(id), std::move(name), DeviceClass::Output, modality, {}, {}, std::move(perception)};
}

Catalog build_default_catalog() {
    constexpr auto one = DeviceClass::OneDimensionalInput;
    constexpr auto multi = DeviceClass::MultiDimensionalInput;
    std::vector<DeviceSpec> devices{
        input("hand_button", "Hand button", one, {{A, 3}, {M, 1}, {P, 1}, {S, 0}}, {}),
        input("foot_button", "Foot button", one, {}, {{A, 0}, {M, 1}, {P, 0}, {D, 1}, {S, 0}}),
        input("analog_joystick", "Analog joystick", multi, {{A, 2}, {M, 0}, {P, 0}, {D, 0}, {S, 0}}, {},
              {{C::Vision, 1}}),
        input("digital_joystick", "Digital joystick", multi, {{A, 2}, {M, 0}, {P, 0}, {D, 1}, {S, 0}}, {}),
        input("keyboard", "Keyboard", multi, {{A, 1}, {M, 0}, {P, 0}, {D, 0}, {S, 0}}, {}, {{C::Vision, 0}}),
        input("mouse", "Mouse", multi, {{A, 0}, {M, 0}, {P, 0}, {D, 0}, {S, 0}}, {}, {{C::Vision, 1}}),
        input("touchpad", "Touchpad", multi, {{A, 2}, {M, 1}, {P, 0}, {D, 0}, {S, 0}}, {}, {{C::Vision, 1}}),
        input("trackball_mouse", "Trackball mouse", multi, {{A, 2}, {M, 1}, {P, 0}, {D, 1}, {S, 0}}, {}),
        input("key_mouse", "Key mouse", multi, {{A, 1}, {M, 1}, {P, 0}, {D, 1}, {S, 0}}, {}, {{C::Vision, 0}}),
        input("foot_mouse", "Foot mouse", multi, {}, {{A, 0}, {M, 0}, {P, 0}, {D, 0}, {S, 0}}, {{C::Vision, 0}}),
        input("mouth_mouse", "Mouth mouse", multi, {}, {}, {{C::Vision, 0}}),
        output("display", "Display", OutputModality::Visual, {{C::Vision, 0}}),
        output("signal_tower", "Signal tower", OutputModality::Visual, {{C::Vision, 0}}),
        output("speaker", "Speaker", OutputModality::Auditory, {{C::Hearing, 0}}),
    };
    return Catalog("builtin-1", default_scales(), std::move(devices));
}

} // namespace

const Catalog& default_catalog() {
    static const Catalog catalog = build_default_catalog();
    return catalog;
}

std::vector<DeviceSpec> list_devices(const Catalog& catalog, std::optional<DeviceClass> filter) {
    std::vector<DeviceSpec> out;
    for (const auto& d : catalog.devices()) {
        if (!filter || d.device_class == *filter) out.push_back(d);
    }
    return out;
}

Catalog load_catalog(std::string_view text) {
    return detail::catalog_from_json(detail::parse_json(text, "catalog"));
}

std::string serialize_catalog(const Catalog& catalog) { return detail::dump(detail::catalog_to_json(catalog)); }

namespace detail {

namespace {

Json row_to_json(const RequirementMap& row) {
    Json out = Json::object();
    for (const auto& [category, max] : row) out[std::string(category_key(category))] = max;
    return out;
}

RequirementMap row_from_json(const Json& json, const std::string& path, Applicability expected,
                             ViolationSink& sink) {
    RequirementMap row;
    if (!json.is_object()) {
        sink.add(ErrorKind::Malformed, path, "expected an object");
        return row;
    }
    for (const auto& [key, value] : json.items()) {
        const std::string cell_path = join_path(path, key);
        auto category = category_from_key(key);
        if (!category || applicability(*category) != expected) {
            sink.add(ErrorKind::UnknownKey, cell_path, "unknown category key '" + key + "'");
            continue;
        }
        if (!value.is_number_integer()) {
            sink.add(ErrorKind::Malformed, cell_path, "expected an integer max degree");
            continue;
        }
        row[*category] = value.get<int>();
    }
    return row;
}

std::optional<std::string> string_field(const Json& obj, const char* key, const std::string& base,
                                        ViolationSink& sink, bool required = true) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        if (required) sink.add(ErrorKind::Malformed, join_path(base, key), "missing field");
        return std::nullopt;
    }
    if (!it->is_string()) {
        sink.add(ErrorKind::Malformed, join_path(base, key), "expected a string");
        return std::nullopt;
    }
    return it->get<std::string>();
}

} // namespace

Json catalog_to_json(const Catalog& catalog) {
    Json devices = Json::array();
    for (const auto& d : catalog.devices()) {
        Json entry{{"id", d.id}, {"name", d.display_name}, {"class", device_class_key(d.device_class)}};
        if (d.modality) entry["modality"] = modality_key(*d.modality);
        if (!d.arm.empty()) entry["arm"] = row_to_json(d.arm);
        if (!d.leg.empty()) entry["leg"] = row_to_json(d.leg);
        if (!d.perception.empty()) entry["perception"] = row_to_json(d.perception);
        devices.push_back(std::move(entry));
    }
    return Json{{"version", catalog.version()}, {"devices", std::move(devices)}};
}

Catalog catalog_from_json(const Json& json) {
    ViolationSink sink;
    if (!json.is_object()) {
        sink.add(ErrorKind::Malformed, "", "catalog must be an object");
        sink.throw_if_any();
    }
    for (const auto& [key, value] : json.items()) {
        if (key != "version" && key != "devices") sink.add(ErrorKind::UnknownKey, key, "unknown field '" + key + "'");
    }
    std::string version = string_field(json, "version", "", sink).value_or("");

    std::vector<DeviceSpec> devices;
    auto list = json.find("devices");
    if (list == json.end()) {
        sink.add(ErrorKind::Malformed, "devices", "missing field");
    } else if (!list->is_array()) {
        sink.add(ErrorKind::Malformed, "devices", "expected an array");
    } else {
        for (std::size_t i = 0; i < list->size(); ++i) {
            const Json& entry = (*list)[i];
            const std::string base = index_path("devices", i);
            if (!entry.is_object()) {
                sink.add(ErrorKind::Malformed, base, "expected an object");
                continue;
            }
            DeviceSpec d;
            for (const auto& [key, value] : entry.items()) {
                static const std::set<std::string> known{"id", "name", "class", "modality", "arm", "leg", "perception"};
                if (!known.contains(key)) sink.add(ErrorKind::UnknownKey, join_path(base, key), "unknown field '" + key + "'");
            }
            d.id = string_field(entry, "id", base, sink).value_or("");
            d.display_name = string_field(entry, "name", base, sink).value_or("");
            if (auto cls = string_field(entry, "class", base, sink)) {
                if (auto parsed = device_class_from_key(*cls)) {
                    d.device_class = *parsed;
                } else {
                    sink.add(ErrorKind::UnknownKey, join_path(base, "class"), "unknown device class '" + *cls + "'");
                }
            }
            if (auto mod = string_field(entry, "modality", base, sink, false)) {
                if (auto parsed = modality_from_key(*mod)) {
                    d.modality = *parsed;
                } else {
                    sink.add(ErrorKind::UnknownKey, join_path(base, "modality"), "unknown modality '" + *mod + "'");
                }
            }
            if (auto it = entry.find("arm"); it != entry.end())
                d.arm = row_from_json(*it, join_path(base, "arm"), Applicability::Limb, sink);
            if (auto it = entry.find("leg"); it != entry.end())
                d.leg = row_from_json(*it, join_path(base, "leg"), Applicability::Limb, sink);
            if (auto it = entry.find("perception"); it != entry.end())
                d.perception = row_from_json(*it, join_path(base, "perception"), Applicability::Perception, sink);
            devices.push_back(std::move(d));
        }
    }
    sink.throw_if_any();
    return Catalog(std::move(version), default_scales(), std::move(devices));
}

} // namespace detail

} // namespace devmatch
