#pragma once

#include <stdexcept>
#include <string>

namespace rp {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent vectors of unequal length were mixed.
class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Two ideals from different variable contexts met in one operation.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

/// An exponent matrix violated a structural requirement (e.g. zero column).
class InvalidMatrixError : public Error {
public:
    explicit InvalidMatrixError(const std::string& what) : Error(what) {}
};

/// Operation applied outside its domain (e.g. delta* of the zero ideal).
class UndefinedOperationError : public Error {
public:
    explicit UndefinedOperationError(const std::string& what) : Error(what) {}
};

/// A caller-checkable precondition failed (bad bounds, wrong input class).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A mathematical hypothesis required by a verification does not hold for
/// the given input. Carries a printable certificate of the failure.
class HypothesisError : public Error {
public:
    HypothesisError(const std::string& what, std::string certificate)
        : Error(what), certificate_(std::move(certificate)) {}
    const std::string& certificate() const { return certificate_; }

private:
    std::string certificate_;
};

/// Ideal-file syntax error with source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace rp
