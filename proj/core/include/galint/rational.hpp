#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace galint {

// Exact rational arithmetic is delegated to GMP. mpq_class values are kept
// canonical (gcd(|num|, den) = 1, den > 0, zero is 0/1) by construction;
// every helper below preserves that form.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (decimal). Throws ParseError on malformed input
// or zero denominator.
Rational rational_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

// r^e for any integer e; throws MathError for 0 raised to a negative power.
Rational rational_pow(const Rational& r, long e);

bool rational_is_integer(const Rational& r);

// Exact integer value; throws MathError when r is not an integer or does
// not fit in long.
long rational_to_long(const Rational& r);

// Nonnegative square root if r is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

// gcd of |a|, |b| as nonnegative rational: gcd(p1/q1, p2/q2) =
// gcd(p1,p2)/lcm(q1,q2). gcd(0,0) = 0.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace galint
