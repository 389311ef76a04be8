#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galint {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lexical or grammatical error in an expression string; position is a
// 0-based byte offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Undefined arithmetic: zero denominator, substitution into a pole,
// epsilon-expansion of a function with a pole on the curve, ...
struct MathError : Error {
    using Error::Error;
};

// Input fails a structural precondition (arity mismatch, undeclared
// symbol, inconsistent assumption set, ...).
struct InputError : Error {
    using Error::Error;
};

}  // namespace galint
