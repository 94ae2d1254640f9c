#pragma once

#include <stdexcept>
#include <string>

namespace domint {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
struct DomainError : Error {
    using Error::Error;
};

// Gamma-type pole hit (non-positive integer first argument).
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A requested moment diverges. Distinct from DomainError so callers can
// tell "does not exist" apart from "bad input".
struct MomentUndefinedError : Error {
    using Error::Error;
};

// Model outside what a closed form supports (e.g. non-integer Nakagami m
// in the finite-sum outage expression, derivative order past the cap).
struct UnsupportedModelError : Error {
    using Error::Error;
};

// Requested service rate cannot stabilise the queue (r <= arrival rate).
struct InfeasibleRateError : Error {
    using Error::Error;
};

// Root bracketing failed: no sign change on the given interval.
struct BracketError : Error {
    using Error::Error;
};

// Quadrature or series did not converge to the requested tolerance.
struct NumericError : Error {
    using Error::Error;
};

// Simulation window too small: too many trials lacked the requested statistic.
struct WindowError : Error {
    using Error::Error;
};

} // namespace domint
