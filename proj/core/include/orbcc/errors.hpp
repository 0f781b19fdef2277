#pragma once

#include <stdexcept>
#include <string>

namespace orbcc {

/// Base class for all library errors. Input-side errors derive from it
/// directly; errors that indicate a broken internal assumption derive from
/// InternalError (the CLI maps the former to exit 1, the latter to exit 2).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class AsymmetricMatrix : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NegativeOffDiagonal : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyStratification : public Error {
public:
    using Error::Error;
};

class InvalidMultiplicity : public Error {
public:
    using Error::Error;
};

class OutsideKltRange : public Error {
public:
    using Error::Error;
};

class NegativeGenus : public Error {
public:
    using Error::Error;
};

class UnsupportedJetOrder : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

/// Polynomial fit of the oracle's sampled Euler characteristics failed its
/// verification points.
class DegreeMismatch : public InternalError {
public:
    using InternalError::InternalError;
};

/// Residue classes of the oracle's quasi-polynomial disagree on the leading
/// coefficient.
class ClassDisagreement : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace orbcc
