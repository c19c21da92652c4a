#pragma once

#include <stdexcept>
#include <string>

namespace memcarbon {

// Base error. exit_code() maps onto the CLI contract:
//   2 validation error, 3 missing input, 4 internal inconsistency.
class Error : public std::runtime_error {
public:
    Error(std::string msg, int exit_code)
        : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

// Invalid parameter, violated invariant, or malformed input data.
class ValidationError : public Error {
public:
    explicit ValidationError(std::string msg) : Error(std::move(msg), 2) {}
};

// Input file or record does not match the documented schema.
class SchemaError : public ValidationError {
public:
    explicit SchemaError(std::string msg) : ValidationError(std::move(msg)) {}
};

// A lookup (device, design point, buffer reference) had no match.
class NotFoundError : public Error {
public:
    explicit NotFoundError(std::string msg) : Error(std::move(msg), 2) {}
};

// A required input file is absent or unreadable.
class MissingInputError : public Error {
public:
    explicit MissingInputError(std::string msg) : Error(std::move(msg), 3) {}
};

// The tool contradicted itself (e.g. totals that do not sum).
class InternalError : public Error {
public:
    explicit InternalError(std::string msg) : Error(std::move(msg), 4) {}
};

}  // namespace memcarbon
