#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Configuration-side failures (bad input files, unknown names, invalid
// parameter ranges map to std::domain_error / std::invalid_argument).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MaterialNotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failures detected while solving.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contrast factor evaluated at the plasmon pole 2*lambda = r.
struct PoleError : NumericalError {
    using NumericalError::NumericalError;
};

// An eigenvalue that must stay positive reached zero or below.
struct ModeCollapseError : NumericalError {
    using NumericalError::NumericalError;
};

// A quadratic-eigenproblem root acquired an imaginary part above tolerance.
struct NonRealModeError : NumericalError {
    using NumericalError::NumericalError;
};

// Analytic derivative and finite-difference cross-check disagree.
struct ConsistencyError : NumericalError {
    using NumericalError::NumericalError;
};

// Iterative procedure failed to converge within its cap.
struct ConvergenceError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace casimir
