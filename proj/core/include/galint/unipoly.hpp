#pragma once

#include <utility>
#include <vector>

#include "galint/ratfunc.hpp"

namespace galint {

// Dense univariate polynomial in one distinguished variable ("z" by
// convention) with coefficients in the parameter field Q(params).
// Coefficients never depend on the distinguished variable.
class UniPoly {
public:
    UniPoly() = default;  // zero
    explicit UniPoly(const RatFunc& c);
    explicit UniPoly(std::vector<RatFunc> coeffs);

    static UniPoly variable();  // the polynomial z

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    const RatFunc& coeff(std::size_t i) const;  // 0 beyond the degree
    RatFunc lc() const;                          // 0 for the zero polynomial

    // Order of vanishing at z = 0; pre: nonzero.
    long val0() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend UniPoly operator*(const RatFunc& s, const UniPoly& p);

    UniPoly pow(long e) const;  // pre: e >= 0
    UniPoly monic() const;      // pre: nonzero
    UniPoly derivative() const;

    RatFunc eval(const RatFunc& point) const;

    // p(alpha*z + beta); alpha, beta from the parameter field.
    UniPoly compose_affine(const RatFunc& alpha, const RatFunc& beta) const;

    // Exact division by z^k; pre: val0() >= k.
    UniPoly shift_down(long k) const;
    UniPoly mul_power(long k) const;  // multiply by z^k

    RatFunc to_ratfunc(const std::string& var) const;
    static UniPoly from_poly(const Poly& p, const std::string& var);

    std::string to_string(const std::string& var) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    std::vector<RatFunc> c_;
    void trim();
};

// Euclidean division a = q*b + r with deg r < deg b; throws on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Exact quotient; throws MathError when the division leaves a remainder.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

// Monic gcd over the coefficient field (Euclid); gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// r viewed as an element of K(var): returns (num, den) with den nonzero.
// The pair is reduced (coprime) and den is monic.
std::pair<UniPoly, UniPoly> unipair_from_ratfunc(const RatFunc& r, const std::string& var);

}  // namespace galint
