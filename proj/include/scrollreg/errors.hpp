#ifndef SCROLLREG_ERRORS_HPP
#define SCROLLREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scrollreg {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by zero in GF(p), inverse of 0, colon by 0, ...
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Operands live in incompatible rings (variable count, characteristic).
struct DimensionError : Error {
    using Error::Error;
};

/// Leading term of the zero polynomial and similar degenerate requests.
struct ZeroPolynomialError : Error {
    using Error::Error;
};

/// Input scheme is not finite where a finite one is required.
struct NotFiniteError : Error {
    int dimension;
    explicit NotFiniteError(int dim)
        : Error("scheme is not finite: dimension " + std::to_string(dim)), dimension(dim) {}
};

/// Numeric input violates a formula's hypotheses.
struct HypothesisError : Error {
    using Error::Error;
};

/// Requested degree window is too small to certify stabilization.
struct WindowInconclusiveError : Error {
    using Error::Error;
};

/// Recipe text could not be parsed or describes an unsupported construction.
struct RecipeError : Error {
    using Error::Error;
};

/// Divisor section vanishes on a ruling component (would produce a non-reduced divisor).
struct NonReducedRecipeError : RecipeError {
    using RecipeError::RecipeError;
};

/// Projection center meets the variety.
struct CenterMeetsVarietyError : Error {
    using Error::Error;
};

/// Cooperative per-stage timeout expired.
struct TimeoutError : Error {
    using Error::Error;
};

} // namespace scrollreg

#endif
