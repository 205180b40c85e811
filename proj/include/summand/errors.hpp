#pragma once

#include <stdexcept>
#include <string>

namespace summand {

// Base class for everything the engine can throw on bad input or bad luck.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed instance data: non-associative tables, unstable subspaces,
// dimension mismatches, failed preconditions.
struct ValidationError : Error {
    using Error::Error;
};

// Instance file could not be parsed; message carries a JSON path anchor.
struct ParseError : Error {
    using Error::Error;
};

// The modulus is too small for a requested computation (needs p > dim).
struct ModulusError : Error {
    using Error::Error;
};

// A Las Vegas search ran out of retries. Never a wrong answer.
struct RetryError : Error {
    using Error::Error;
};

// A state the underlying theorems rule out. Always a bug, never user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace summand
