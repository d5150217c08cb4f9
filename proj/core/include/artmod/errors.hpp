#pragma once

#include <stdexcept>
#include <string>

namespace artmod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (unsupported prime, negative truncation, ...).
struct ValueError : Error {
    using Error::Error;
};

// Operands belong to different rings / ambient spaces.
struct MismatchError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

// A defining relation has a nonzero constant term (the quotient would not be local).
struct ConstantTermError : ParseError {
    using ParseError::ParseError;
};

struct NonPrimeError : ParseError {
    using ParseError::ParseError;
};

// An exhaustive enumeration or search would exceed the configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Two independent decision methods disagreed; this is a bug, never a
// mathematical ambiguity, so callers must not swallow it.
struct CrossCheckError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct NotPrincipalError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotUniserialError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotCyclicError : PreconditionError {
    using PreconditionError::PreconditionError;
};

}  // namespace artmod
