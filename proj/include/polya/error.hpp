#pragma once

#include <stdexcept>
#include <string>

namespace polya {

// Categories map one-to-one onto the C API status codes.
enum class ErrorKind {
    InvalidArgument,
    LimitExceeded,
    Numeric,
    CheckFailed,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
    throw Error(ErrorKind::InvalidArgument, what);
}

[[noreturn]] inline void throw_limit(const std::string& what) {
    throw Error(ErrorKind::LimitExceeded, what);
}

[[noreturn]] inline void throw_numeric(const std::string& what) {
    throw Error(ErrorKind::Numeric, what);
}

}  // namespace polya
