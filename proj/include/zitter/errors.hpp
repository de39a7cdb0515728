#pragma once

#include <stdexcept>
#include <string>

namespace zitter {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid bounds are inverted or degenerate.
struct InvalidBoundsError : Error { using Error::Error; };

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : Error { using Error::Error; };

// The grid cannot represent the requested state (norm deficit before
// renormalization exceeded the budget).
struct TruncationError : Error { using Error::Error; };

// An input state or envelope was expected to have unit norm.
struct NormalizationError : Error { using Error::Error; };

// A closed form is only valid in a restricted parameter regime.
struct UnsupportedRegimeError : Error { using Error::Error; };

// Finite-difference step too coarse for the requested accuracy.
struct StepTooLargeError : Error { using Error::Error; };

// The momentum grid no longer resolves the phase gradient of the state.
struct ResolutionError : Error { using Error::Error; };

// All laser fields vanish; the mixing angle is undefined.
struct ZeroFieldError : Error { using Error::Error; };

// Scenario configuration could not be parsed or contains unknown keys.
struct ConfigError : Error { using Error::Error; };

}  // namespace zitter
