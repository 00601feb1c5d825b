#pragma once

#include <stdexcept>
#include <string>

namespace mlrelax {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument: parameter outside its domain, malformed grid, etc.
struct DomainError : Error {
    using Error::Error;
};

// Gamma evaluated at a non-positive integer.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Result exceeds the representable double range.
struct OverflowError : Error {
    using Error::Error;
};

// Series failed to meet its stopping rule (includes the asymptotic
// divergence case where the expansion variable is too small).
struct ConvergenceError : Error {
    using Error::Error;
};

// Adaptive quadrature could not reach the requested accuracy.
struct QuadratureError : Error {
    using Error::Error;
};

// Time stepper produced a negative or non-monotone trajectory.
struct InstabilityError : Error {
    using Error::Error;
};

}  // namespace mlrelax
