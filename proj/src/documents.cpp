#include "documents.hpp"

namespace devmatch::detail {

namespace {

int rank(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Malformed: return 0;
    case ErrorKind::UnknownKey: return 1;
    case ErrorKind::UnknownDevice: return 2;
    case ErrorKind::DuplicateId: return 3;
    case ErrorKind::InvalidDevice: return 4;
    case ErrorKind::OutOfRange: return 5;
    case ErrorKind::Contract: return 6;
    }
    return 7;
}

} // namespace

Json parse_json(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        // e.what() carries "at line L, column C" after a "[json.exception...] " tag
        std::string_view message = e.what();
        if (const auto tag = message.find("] "); tag != std::string_view::npos) message.remove_prefix(tag + 2);
        throw Error(ErrorKind::Malformed, "", std::string(what) + ": " + std::string(message));
    }
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

void ViolationSink::add(ErrorKind kind, std::string path, std::string message) {
    if (violations_.empty() || rank(kind) < rank(worst_)) worst_ = kind;
    violations_.push_back({std::move(path), std::move(message)});
}

void ViolationSink::throw_if_any() const {
    if (!violations_.empty()) throw Error(worst_, violations_);
}

std::string join_path(std::string_view parent, std::string_view key) {
    std::string path(parent);
    if (!path.empty()) path += '.';
    path += key;
    return path;
}

std::string index_path(std::string_view parent, std::size_t index) {
    return std::string(parent) + "[" + std::to_string(index) + "]";
}

Json scales_to_json(std::span<const DegreeScale> scales) {
    Json categories = Json::array();
    for (Category c : kAllCategories) {
        Json entry{{"key", category_key(c)},
                   {"name", category_name(c)},
                   {"applicability", applicability(c) == Applicability::Limb ? "limb" : "perception"}};
        Json per_kind = Json::array();
        for (const auto& scale : scales) {
            if (scale.category != c) continue;
            Json levels = Json::array();
            for (const auto& level : scale.levels) {
                levels.push_back(Json{{"value", level.value}, {"label", level.label}});
            }
            Json s = Json::object();
            s["limb_kind"] = scale.limb_kind ? Json(limb_kind_key(*scale.limb_kind)) : Json(nullptr);
            s["max_degree"] = scale.max_degree();
            s["levels"] = std::move(levels);
            per_kind.push_back(std::move(s));
        }
        entry["scales"] = std::move(per_kind);
        categories.push_back(std::move(entry));
    }
    return categories;
}

} // namespace devmatch::detail
