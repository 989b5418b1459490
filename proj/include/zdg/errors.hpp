#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdg {

/// Base class for everything this library throws on bad input.
struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degenerate or ill-formed construction parameters (Z(1), non-prime modulus, ...).
struct InvalidSpec : RingError {
    using RingError::RingError;
};

/// Monomial quotient whose ideal lacks a pure power of some variable.
struct InfiniteQuotient : RingError {
    using RingError::RingError;
};

/// Univariate quotient by a non-monic or constant polynomial.
struct NonMonic : RingError {
    using RingError::RingError;
};

/// Construction would exceed the configured element-count bound.
struct OrderBoundExceeded : RingError {
    using RingError::RingError;
};

/// Explicit operation tables that fail shape or ring-axiom checks.
struct MalformedTable : RingError {
    using RingError::RingError;
};

/// classify_factor called on a ring that is not local.
struct NotLocal : RingError {
    using RingError::RingError;
};

/// Graph query for an element that is not a vertex.
struct UnknownVertex : RingError {
    using RingError::RingError;
};

/// verify_claim called with an unregistered claim id.
struct UnknownClaim : RingError {
    using RingError::RingError;
};

/// Ring-spec text rejected; `offset` is the byte position of the problem.
struct ParseError : RingError {
    ParseError(const std::string& what, std::size_t offset)
        : RingError(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

} // namespace zdg
