#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Base class of every error thrown by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic between values of different coefficient modes.
struct ModeMismatchError : Error {
    using Error::Error;
};

/// A degree constraint was violated (inhomogeneous substitution image,
/// wrongly graded class, bad projection bounds).
struct DegreeError : Error {
    using Error::Error;
};

/// exact division failed; the message names the offending monomial.
struct DivisionError : Error {
    using Error::Error;
};

/// A polynomial mentions a generator the ring does not own.
struct ForeignGeneratorError : Error {
    using Error::Error;
};

/// Integration requested where no (complete) integration table exists.
struct IntegrationError : Error {
    using Error::Error;
};

/// A presentation or context failed validation.
struct ValidationError : Error {
    using Error::Error;
};

/// i*c(M) != c(N)c(E); the message names the first failing degree.
struct WhitneyViolationError : ValidationError {
    using ValidationError::ValidationError;
};

/// dim M != dim N + (codimension shift).
struct DimensionMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

/// A user-supplied pullback/pushforward table is incomplete or violates the
/// projection formula or integration compatibility.
struct TableInconsistencyError : ValidationError {
    using ValidationError::ValidationError;
};

/// Scenario input could not be parsed or resolved.
struct ScenarioError : Error {
    using Error::Error;
};

} // namespace blowup
