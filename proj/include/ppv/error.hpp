#pragma once

#include <stdexcept>
#include <string>

namespace ppv {

enum class ErrorKind {
    NotAPrimePower,
    TooLarge,
    DivisionByZero,
    ContextMismatch,
    CapExceeded,
    Overflow,
    Degenerate,
    InvalidDivisor,
    SpecViolation,
    PreconditionFailed,
    ParseError,
    InvalidArgument,
};

const char* to_string(ErrorKind k);

/// All library errors carry a machine-checkable kind plus a human message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace ppv
