/* errors.hpp -- exception taxonomy shared by all modules. */
#pragma once

#include <stdexcept>
#include <string>

namespace mftop {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural mismatch: universes, dimensions or grade chains disagree.
struct ShapeError : Error {
    using Error::Error;
};

/// A point label that does not belong to the universe in question.
struct PointError : Error {
    using Error::Error;
};

/// A grade or document value outside the permitted domain.
struct ValueError : Error {
    using Error::Error;
};

/// An operation precondition that callers must establish was violated
/// (empty family, seed outside the restricted class, invalid system, ...).
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace mftop
