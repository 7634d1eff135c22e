#pragma once

#include <stdexcept>
#include <string>

namespace scorematch {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Pivoting detected rank deficiency in an unregularized solve.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// An operation that needs at least one element received none.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Evaluation point lies outside the model's open support.
class SupportError : public Error {
public:
    using Error::Error;
};

/// Basis model constructed from an empty basis list.
class EmptyBasis : public Error {
public:
    using Error::Error;
};

/// Matrix/vector shapes are inconsistent.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Estimation problem remains unsolvable even after ridge repair.
class DegenerateProblem : public Error {
public:
    using Error::Error;
};

/// Data contains non-positive values where positivity is required.
class NonPositiveData : public Error {
public:
    using Error::Error;
};

} // namespace scorematch
