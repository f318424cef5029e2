#ifndef DEVMATCH_ERROR_HPP
#define DEVMATCH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace devmatch {

enum class ErrorKind {
    Malformed,      // not a well-formed document, or a field has the wrong type
    UnknownKey,     // a key outside the documented vocabulary
    OutOfRange,     // a degree outside its scale
    DuplicateId,
    InvalidDevice,  // device definition violates a catalog rule
    UnknownDevice,  // a plan references an id the catalog does not have
    Contract,       // caller broke a precondition
};

const char* to_string(ErrorKind kind);

/// A single problem located by a dotted path into the offending document,
/// e.g. `perception.vision` or `devices[3].arm.mobility`.
struct Violation {
    std::string path;
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// Thrown by the document readers and by operations whose preconditions are
/// violated. Readers collect every violation they find before throwing, so
/// callers can report field-level errors in one pass.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::vector<Violation> violations);
    Error(ErrorKind kind, std::string path, std::string message);

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    ErrorKind kind_;
    std::vector<Violation> violations_;
};

} // namespace devmatch

#endif // DEVMATCH_ERROR_HPP
