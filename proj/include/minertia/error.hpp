#pragma once

#include <stdexcept>
#include <string>

namespace minertia {

enum class ErrorKind {
    DivideByZero,
    InvalidInput,
    NotHermitian,
    SingularTransform,
    NotProjectivePoint,
    UnsupportedSize,
    HypothesisNotMet,
    Inconsistency,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::NotProjectivePoint: return "NotProjectivePoint";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::Inconsistency: return "Inconsistency";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace minertia
