#pragma once

#include <stdexcept>
#include <string>

namespace fuchsforge {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalars from different coefficient fields were mixed in one computation.
struct FieldMismatchError : Error {
    using Error::Error;
};

/// A documented precondition of an operation was violated.
struct PreconditionError : Error {
    using Error::Error;
};

/// The tracked truncation order is too low to complete the computation
/// (e.g. a leading coefficient cannot be inverted to the required order).
struct PrecisionError : Error {
    using Error::Error;
};

/// Input text does not match the operator grammar.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// The Frobenius recursion (or a first-order quadrature) demands a
/// logarithmic term: p0(lambda+m) = 0 with a nonzero right hand side.
struct LogObstruction : Error {
    LogObstruction(const std::string& msg, int order_)
        : Error(msg + " (t-order " + std::to_string(order_) + ")"), order(order_) {}
    int order;
};

/// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace fuchsforge
