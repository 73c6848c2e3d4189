#pragma once

#include <stdexcept>
#include <string>

namespace upward {

// Error taxonomy used across the library.
//
//   StructuralError   -- malformed values: duplicate or dangling ids, cyclic
//                        graphs where acyclic ones are required, id collisions
//   DomainError       -- operation undefined for the given (well-formed) value
//   PreconditionError -- caller violated a stated precondition
//   ParseError        -- unreadable document text
//
// Geometric invalidity of a drawing is not an error: it is reported through
// ValidationReport values (see geometry.hpp).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StructuralError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace upward
