#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hankel {

/// Caller violated an operation's contract (bad parameters, mismatched fields,
/// malformed text).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public UsageError {
public:
    DivisionByZero() : UsageError("division by zero in finite field") {}
};

/// An exhaustive job would exceed the configured work cap.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what_arg, std::string required_work)
        : std::runtime_error(what_arg), required_(std::move(required_work)) {}

    /// Decimal string of the number of rank tests the job would need.
    const std::string& required_work() const noexcept { return required_; }

private:
    std::string required_;
};

}  // namespace hankel
