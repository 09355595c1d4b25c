#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacobi_kit {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values living on different charts were combined.
class ChartMismatch : public Error {
public:
    using Error::Error;
};

/// Division by an expression that is identically zero.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Evaluation at a point where a denominator vanishes.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Grade or kind constraint violated in a tensor operation.
class GradeError : public Error {
public:
    using Error::Error;
};

/// Syntax or lookup failure while parsing an expression. Carries the
/// byte offset into the source string where the problem was detected.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A linear system that should be uniquely solvable turned out singular;
/// for contact computations this flags a degenerate (non-contact) form.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// An operation that requires a genuine Jacobi pair received a pair whose
/// structure equations do not hold.
class NotAJacobiPair : public Error {
public:
    using Error::Error;
};

/// Malformed structure-definition file.
class StructureFileError : public Error {
public:
    using Error::Error;
};

}  // namespace jacobi_kit

namespace jacobi_kit::symcore {
using jacobi_kit::ChartMismatch;
using jacobi_kit::DivisionByZero;
using jacobi_kit::Error;
using jacobi_kit::GradeError;
using jacobi_kit::NotAJacobiPair;
using jacobi_kit::ParseError;
using jacobi_kit::PoleError;
using jacobi_kit::SingularSystem;
using jacobi_kit::StructureFileError;
}  // namespace jacobi_kit::symcore
