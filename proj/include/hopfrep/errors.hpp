#pragma once

#include <stdexcept>
#include <string>

namespace hopfrep {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A linear map was applied to, or composed with, an element or map whose
/// tensor space does not match.
class SpaceMismatch : public Error {
public:
    explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

/// A presentation that failed its local-confluence check was handed to an
/// operation that requires unique normal forms.
class NotConfluent : public Error {
public:
    explicit NotConfluent(const std::string& what) : Error(what) {}
};

/// An antipode computation was requested on a structure without one.
class AntipodeAbsent : public Error {
public:
    explicit AntipodeAbsent(const std::string& what) : Error(what) {}
};

/// Evaluation of a Laurent polynomial with negative exponents at q = 0.
class ZeroEvaluationPoint : public Error {
public:
    explicit ZeroEvaluationPoint(const std::string& what) : Error(what) {}
};

/// An induced structure map produced an element outside the induced carrier.
class ClosureViolation : public Error {
public:
    explicit ClosureViolation(const std::string& what) : Error(what) {}
};

/// The dense oracle and the symbolic engine disagreed on a verdict.
class EvaluationMismatch : public Error {
public:
    explicit EvaluationMismatch(const std::string& what) : Error(what) {}
};

/// Positioned error from the presentation DSL parser.
class ParseError : public Error {
public:
    enum class Kind { Syntax, UnknownGenerator, NonDecreasingRule, NotLocallyConfluent };

    ParseError(Kind kind, int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          kind_(kind),
          line_(line),
          column_(column) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    Kind kind_;
    int line_;
    int column_;
};

}  // namespace hopfrep
