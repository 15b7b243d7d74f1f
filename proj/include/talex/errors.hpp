#pragma once

#include <stdexcept>
#include <string>

namespace talex {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/vector dimension mismatch (non-square determinant input, etc.).
struct ShapeError : Error {
    using Error::Error;
};

// Arithmetic violation: division by zero, degree of the zero polynomial,
// exponent overflow, mixed prime moduli.
struct ArithmeticError : Error {
    using Error::Error;
};

// A matrix required to be invertible is singular.
struct SingularMatrixError : Error {
    using Error::Error;
};

// Torsion requested for a non-acyclic complex without homology bases.
struct NonAcyclicError : Error {
    using Error::Error;
};

// Malformed user input (files, field specifiers, unknown table names).
struct InputError : Error {
    using Error::Error;
};

// A documented mathematical precondition of an operation failed
// (e.g. a representation violating a relator, zero order denominators).
struct HypothesisError : Error {
    using Error::Error;
};

// Cross-checks that can only fail through an implementation bug
// (e.g. two provably unit-equivalent computations disagreeing).
struct InternalError : Error {
    using Error::Error;
};

} // namespace talex
