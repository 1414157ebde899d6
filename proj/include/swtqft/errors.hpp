// Error hierarchy. UserError maps to CLI exit code 1, InternalError to 2.

#pragma once

#include <stdexcept>
#include <string>

namespace swtqft {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, invalid parameters, inconsistent words.
struct UserError : Error {
    using Error::Error;
};

/// Word-file syntax or structure problem, carries a 1-based line number
/// (0 = end of input).
struct ParseError : UserError {
    ParseError(const std::string& message, int line_number)
        : UserError(message + " at line " + std::to_string(line_number)),
          line(line_number) {}
    int line;
};

/// Structural problem with a cobordism word (underflow, unclosed trail, ...).
struct WordError : UserError {
    using UserError::UserError;
};

/// eta_bar == d: the critical set degenerates to flat connections and the
/// whole calculus is undefined.
struct MorseBottError : UserError {
    using UserError::UserError;
};

/// An invariant of the engine itself failed (e.g. a trace with a non-unit
/// denominator). Signals a bug, never bad input.
struct InternalError : Error {
    using Error::Error;
};

struct IntegralityError : InternalError {
    using InternalError::InternalError;
};

}  // namespace swtqft
