#pragma once

#include <stdexcept>
#include <string>

namespace eigenbound {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// exit codes: input problems exit 2, numeric failures exit 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument (negative δ, ratio outside (0,1), dimension mismatch, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Problem-file schema violation; `pointer` is the JSON pointer of the
/// offending value.
class ValidationError : public ArgumentError {
public:
    ValidationError(std::string pointer, const std::string& message)
        : ArgumentError(pointer + ": " + message), pointer_(std::move(pointer))
    {
    }

    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

/// Invalid or degenerate domain description.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Request outside what the tool supports (unbounded volume, Pucci shooting, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Point outside a profile's validity interval or its monotonicity range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// The requested theorem route does not apply to this operator.
class RouteError : public Error {
public:
    using Error::Error;
};

/// Preconditions of a barrier construction are violated.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Gradient-normalized operator evaluated where φ' = 0.
class SingularPointError : public Error {
public:
    using Error::Error;
};

/// Iteration failed to converge or a bracket could not be found.
class NumericError : public Error {
public:
    using Error::Error;
};

/// A result failed its own certificate or sandwich check.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace eigenbound
