#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bunchlab {

/// Base class for every failure raised by the library.
///
/// `code()` is a short machine-readable tag such as `FacetConditionFails(3)`;
/// `what()` carries the human-readable explanation.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Raised when input data violates an axiom of the structure it claims to be
/// (non-homogeneous relation, invalid F-bunch, cone pair that is not a fan, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Raised when an operation's precondition does not hold for its arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Raised for malformed textual input (documents, fan files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when a criterion is not applicable to the given data.
class UndeterminedError : public Error {
public:
    using Error::Error;
};

} // namespace bunchlab
