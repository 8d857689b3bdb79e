#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

// Error taxonomy mirrors the CLI exit codes: usage problems are handled by
// the argument parser, spec files that fail to parse raise SpecParseError,
// inputs that parse but describe bad geometry (empty, unbounded, nonsimple,
// degenerate) raise GeometryError, and anything that indicates a broken
// internal invariant raises InternalError.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecParseError : Error {
    using Error::Error;
};

struct GeometryError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

// Raised when a candidate height direction produces a vertex-height tie.
// Callers that sample directions catch this and resample; if it escapes to
// the CLI it is treated as an internal failure.
struct NonGenericDirection : Error {
    using Error::Error;
};

} // namespace qtoric
