#include "devmatch/error.hpp"

namespace devmatch {

namespace {

std::string describe(ErrorKind kind, const std::vector<Violation>& violations) {
    std::string text = to_string(kind);
    for (const auto& v : violations) {
        text += "\n  ";
        if (!v.path.empty()) {
            text += v.path;
            text += ": ";
        }
        text += v.message;
    }
    return text;
}

} // namespace

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Malformed: return "malformed document";
    case ErrorKind::UnknownKey: return "unknown key";
    case ErrorKind::OutOfRange: return "value out of range";
    case ErrorKind::DuplicateId: return "duplicate device id";
    case ErrorKind::InvalidDevice: return "invalid device";
    case ErrorKind::UnknownDevice: return "unknown device";
    case ErrorKind::Contract: return "contract violation";
    }
    return "error";
}

Error::Error(ErrorKind kind, std::vector<Violation> violations)
    : std::runtime_error(describe(kind, violations)), kind_(kind), violations_(std::move(violations)) {}

Error::Error(ErrorKind kind, std::string path, std::string message)
    : Error(kind, std::vector<Violation>{Violation{std::move(path), std::move(message)}}) {}

} // namespace devmatch
