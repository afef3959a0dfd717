#pragma once

#include <stdexcept>
#include <string>

namespace tricontract {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interval (or other) argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Parameters outside the regime the convolution estimates are proved for.
struct UnsupportedRegime : Error {
    using Error::Error;
};

// A growth/ratio assumption on the tridiagonal coefficients failed.
struct AssumptionError : Error {
    using Error::Error;
};

// A pivot ratio of the tridiagonal LU recurrence could not be separated from 0.
struct DegenerateLU : Error {
    using Error::Error;
};

// Computational parameters (m, M, L, ...) violate a required inequality.
struct ParameterError : Error {
    using Error::Error;
};

struct SingularError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

// Extended Jacobian lost rank during continuation.
struct FoldError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace tricontract
