#pragma once

#include <stdexcept>
#include <string>

namespace knowflow {

// Base class for all knowflow failures that carry a user-facing message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& file, long line, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ": " + msg), line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
    long line() const { return line_; }

private:
    long line_;
};

// A structurally valid file that violates the expected schema.
class SchemaError : public Error {
public:
    SchemaError(const std::string& field, const std::string& msg)
        : Error(field + ": " + msg), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Invalid or infeasible synthetic-data specification.
class SpecError : public Error {
public:
    using Error::Error;
};

// Iterative method failed to reach tolerance within its iteration cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Citation score has no defined value (zero patent counts or totals).
class UndefinedScoreError : public Error {
public:
    using Error::Error;
};

}  // namespace knowflow
