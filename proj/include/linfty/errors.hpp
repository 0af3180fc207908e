#pragma once

#include <stdexcept>
#include <string>

namespace linfty {

// Base class for kernel errors. Mathematical check failures are NOT errors;
// they are reported through Verdict values. Errors signal malformed input,
// cap overruns or refused preconditions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedInput : Error {
    using Error::Error;
};

// A requested computation would exceed the configured weight/arity caps.
struct TruncationError : Error {
    using Error::Error;
};

struct InvalidComplex : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

struct SymmetryViolation : Error {
    SymmetryViolation(const std::string& msg, std::string witness_)
        : Error(msg), witness(std::move(witness_)) {}
    std::string witness;
};

// An operation refused to run because a prerequisite check failed.
struct Refused : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
        : Error(msg), line(line_), col(col_) {}
    int line = 0;
    int col = 0;
};

}  // namespace linfty
