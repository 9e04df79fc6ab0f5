#pragma once

#include <stdexcept>

namespace refdriver {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interpolation time outside the trajectory span.
struct OutOfRange : Error {
    using Error::Error;
};

// POV history shorter than the lateral-speed estimation window.
struct InsufficientHistory : Error {
    using Error::Error;
};

// Ego never reached the evasive-maneuver deceleration threshold.
struct NoOnset : Error {
    using Error::Error;
};

// Ego was already past the deceleration threshold at the first sample.
struct AlreadyDecelerating : Error {
    using Error::Error;
};

// Every signed-rank difference is zero.
struct AllZero : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvariantViolation : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

}  // namespace refdriver
