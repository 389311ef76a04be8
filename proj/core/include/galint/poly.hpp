#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galint/rational.hpp"

namespace galint {

using ExpVec = std::vector<int>;

// Graded lexicographic order on exponent vectors: higher total degree wins,
// ties are broken lexicographically in the variable order. Both vectors must
// refer to the same variable list.
struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Q. Canonical form: the variable list
// is sorted by name and contains exactly the symbols that occur with a
// positive exponent somewhere; no zero coefficients are stored. Two equal
// polynomials therefore compare equal structurally.
class Poly {
public:
    using TermMap = std::map<ExpVec, Rational, TermOrder>;

    Poly() = default;  // zero
    explicit Poly(const Rational& c);
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(const std::string& name);
    static Poly constant(const Rational& c) { return Poly(c); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    bool is_one() const;
    Rational constant_value() const;  // pre: is_constant()

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    long total_degree() const;  // -1 for zero
    long degree_in(const std::string& v) const;
    bool depends_on(const std::string& v) const;

    // Coefficient of the graded-lex leading term (0 for the zero polynomial).
    Rational leading_coeff() const;

    Poly derivative(const std::string& v) const;
    Poly pow(long e) const;  // pre: e >= 0

    Rational content() const;  // nonnegative gcd of all coefficients
    Poly primitive_part() const;

    // Substitutes a subset of the variables by rational constants.
    Poly eval_partial(const std::map<std::string, Rational>& point) const;
    // Full evaluation; every variable must be bound.
    Rational eval(const std::map<std::string, Rational>& point) const;

    // Univariate view: result[i] is the (v-free) coefficient of v^i.
    std::vector<Poly> coeffs_in(const std::string& v) const;
    static Poly from_coeffs_in(const std::string& v, const std::vector<Poly>& cs);

    std::string to_string() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void prune();
    friend std::pair<Poly, Poly> aligned(const Poly& a, const Poly& b);
};

Poly operator*(const Rational& c, const Poly& p);
Poly operator*(const Poly& p, const Rational& c);

// Monic (graded-lex leading coefficient 1) gcd; gcd(0, p) = monic p,
// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Quotient a/b when the division is exact, nullopt otherwise.
// Throws MathError when b = 0.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Squarefree decomposition p = content * prod f_i^{m_i} with the f_i
// primitive, squarefree, pairwise coprime and nonconstant.
std::vector<std::pair<Poly, long>> squarefree_decomposition(const Poly& p);

// s with s*s = p, if p is a perfect square over Q[vars].
std::optional<Poly> poly_sqrt(const Poly& p);

}  // namespace galint
