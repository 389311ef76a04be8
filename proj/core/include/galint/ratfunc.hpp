#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galint/poly.hpp"

namespace galint {

// Rational function over Q in the symbols it mentions. Canonical form:
// gcd(num, den) = 1 (polynomial gcd and content both removed) and den is
// monic with respect to the graded-lex leading coefficient, the scalar
// being pushed into num. Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}  // zero
    explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);  // normalizes; throws MathError on den = 0

    static RatFunc variable(const std::string& name) {
        return RatFunc(Poly::variable(name));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    Rational constant_value() const;  // pre: is_constant()

    // Sorted union of the variables of num and den.
    std::vector<std::string> vars() const;
    bool depends_on(const std::string& v) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long e) const;  // negative exponents invert

    RatFunc derivative(const std::string& v) const;

    // Simultaneous substitution of variables by rational functions; unbound
    // variables are left alone. Throws MathError when the denominator
    // vanishes identically under the substitution.
    RatFunc substitute(const std::map<std::string, RatFunc>& bindings) const;

    // Exact evaluation at a rational point; nullopt when the point is a pole.
    std::optional<Rational> eval(const std::map<std::string, Rational>& point) const;

    std::string to_string() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    Poly num_, den_;
    void normalize();
};

// normalize(r): the identity on RatFunc (construction canonicalizes), kept
// as the explicit operation for round-tripping externally built pairs.
RatFunc normalize(const Poly& num, const Poly& den);

// Taylor coefficients c_0..c_order of r in eps at 0. Requires the
// denominator of r to be nonzero at eps = 0 (otherwise MathError: pole on
// the expansion point; the caller must split H = F/G and expand parts).
std::vector<RatFunc> epsilon_expansion(const RatFunc& r, const std::string& eps,
                                       long order);

// eps-adic valuation of r: ord_eps(num) - ord_eps(den). Throws on r = 0.
long epsilon_valuation(const RatFunc& r, const std::string& eps);

// s with s*s = r, if r is a perfect square in the rational function field.
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& r);

}  // namespace galint
