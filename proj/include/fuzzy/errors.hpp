#pragma once

#include <stdexcept>
#include <string>

namespace fuzzy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions are incompatible.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// j = 0: the one-dimensional representation has no fuzzy geometry.
class DegenerateRepresentationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Form degree out of range, or a product would exceed the top degree.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition (e.g. a non-idempotent "projector").
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A freshly built object fails its own invariants.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// The volume form has zero norm, so no coefficient can be extracted.
class DegenerateVolumeError : public Error {
public:
    using Error::Error;
};

/// Curvature is not a scalar multiple of the volume form.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A quantity expected to be real carries an imaginary part above tolerance.
class NumericalIntegrityError : public Error {
public:
    using Error::Error;
};

}  // namespace fuzzy
