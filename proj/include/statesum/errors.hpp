#ifndef STATESUM_ERRORS_HPP
#define STATESUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace statesum {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed user input: bad simplex tuples, unreadable files, bad specs.
struct MalformedInputError : Error {
    using Error::Error;
};

/// A simplex referenced by a path, chain or labeling is not in the complex.
struct UnknownSimplexError : MalformedInputError {
    using MalformedInputError::MalformedInputError;
};

/// An operation requiring a connected complex got a disconnected one.
struct DisconnectedError : Error {
    using Error::Error;
};

/// Precondition violation on otherwise well-formed data (open path passed
/// as a loop, non-cycle chain, non-flat labeling, relator violation).
struct PreconditionError : Error {
    using Error::Error;
};

/// Requested computation is outside the supported domain (infinite target
/// group for a Hom count, group order beyond the Cayley-table cap).
struct UnsupportedError : Error {
    using Error::Error;
};

/// The linear system behind a reconstruction has no solution (torsion
/// constraint inconsistent with the requested holonomy values).
struct NoSolutionError : Error {
    using Error::Error;
};

}  // namespace statesum

#endif
