#pragma once

#include <stdexcept>
#include <string>

namespace infoconv {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid inputs: malformed distributions, dimension mismatches, bad
// partitions, out-of-range parameters. Maps to CLI exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// Iterative solver failed to reach the required residual.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    double residual;
};

// An internal identity failed beyond float-noise tolerance (e.g. a
// partial-information atom came out significantly negative). Maps to
// CLI exit code 3.
struct NumericalConsistencyError : Error {
    using Error::Error;
};

// Synergy/redundancy bias requested for a zero-information system.
struct UndefinedBiasError : Error {
    using Error::Error;
};

// A network operation that requires an acyclic internal wiring was
// given a cyclic one.
struct UnsupportedTopologyError : ValidationError {
    using ValidationError::ValidationError;
};

} // namespace infoconv
