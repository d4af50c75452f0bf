#pragma once

#include <stdexcept>
#include <string>

namespace vring {

/// Base class for every failure the library reports.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument is outside the domain an operation is defined on.
struct DomainError : Error {
    using Error::Error;
};

/// The sample grid is too small for the requested mode band.
struct ResolutionError : Error {
    using Error::Error;
};

/// A state violates one of the closure or coupling constraints.
struct ConstraintError : Error {
    using Error::Error;
};

/// Two independent evaluation routes disagree beyond tolerance.
struct ConsistencyError : Error {
    using Error::Error;
};

/// A time step produced runaway growth.
struct StepSizeError : Error {
    using Error::Error;
};

/// Norm drift or another integration invariant failed mid-run.
struct IntegrationError : Error {
    using Error::Error;
};

/// Circulation cannot be recovered from the given data.
struct CirculationError : Error {
    using Error::Error;
};

/// The Fock-space truncation is too small for the requested state.
struct TruncationError : Error {
    using Error::Error;
};

/// A finite-difference gradient came out non-finite.
struct DifferentiationError : Error {
    using Error::Error;
};

/// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

} // namespace vring
