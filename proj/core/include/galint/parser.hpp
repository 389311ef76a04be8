#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "galint/ratfunc.hpp"

namespace galint {

// Expression tree produced by the grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' int)?
//   base   := number | ident | '(' expr ')' | '-' base
// Numbers are decimal integers ("p/q" values arise from division).
// Integer powers may be negative (sugar for division).
struct ExprAST {
    enum class Kind { Constant, Symbol, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Rational value;      // Constant
    std::string name;    // Symbol
    long exponent = 0;   // Pow
    std::vector<std::unique_ptr<ExprAST>> children;
};

// Parses text to a tree without validating identifiers.
std::unique_ptr<ExprAST> parse_to_ast(const std::string& text);

// Parses and evaluates to the canonical rational function in Q(symbols).
// Throws ParseError (syntax, with position), InputError (undeclared
// identifier) or MathError (division by the zero polynomial).
RatFunc parse_expression(const std::string& text, const std::set<std::string>& symbols);

// Canonical printable form; parse_expression(to_expression_string(r)) == r.
std::string to_expression_string(const RatFunc& r);

}  // namespace galint
