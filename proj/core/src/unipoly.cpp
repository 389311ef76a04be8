#include "galint/unipoly.hpp"

#include <sstream>

#include "galint/error.hpp"

namespace galint {

UniPoly::UniPoly(const RatFunc& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() {
    return UniPoly(std::vector<RatFunc>{RatFunc(), RatFunc(Rational(1))});
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const RatFunc& UniPoly::coeff(std::size_t i) const {
    static const RatFunc zero;
    return i < c_.size() ? c_[i] : zero;
}

RatFunc UniPoly::lc() const { return c_.empty() ? RatFunc() : c_.back(); }

long UniPoly::val0() const {
    if (c_.empty()) throw MathError("valuation of the zero polynomial");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<long>(i);
    throw MathError("corrupt polynomial");
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.coeff(i) + b.coeff(i);
    out.trim();
    return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, RatFunc());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
}

UniPoly operator*(const RatFunc& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    UniPoly out = p;
    for (auto& c : out.c_) c *= s;
    return out;
}

UniPoly UniPoly::pow(long e) const {
    if (e < 0) throw MathError("negative exponent on polynomial");
    UniPoly out{RatFunc(Rational(1))};
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw MathError("monic of zero polynomial");
    RatFunc inv = RatFunc(Rational(1)) / lc();
    return inv * *this;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    UniPoly out;
    out.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        out.c_[i - 1] = RatFunc(Rational(static_cast<long>(i))) * c_[i];
    out.trim();
    return out;
}

RatFunc UniPoly::eval(const RatFunc& point) const {
    RatFunc acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
}

UniPoly UniPoly::compose_affine(const RatFunc& alpha, const RatFunc& beta) const {
    UniPoly arg(std::vector<RatFunc>{beta, alpha});
    UniPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * arg + UniPoly(c_[i]);
    return acc;
}

UniPoly UniPoly::shift_down(long k) const {
    if (k == 0) return *this;
    if (is_zero()) return *this;
    if (val0() < k) throw MathError("inexact division by power of z");
    UniPoly out;
    out.c_.assign(c_.begin() + k, c_.end());
    return out;
}

UniPoly UniPoly::mul_power(long k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly out;
    out.c_.assign(static_cast<std::size_t>(k), RatFunc());
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

RatFunc UniPoly::to_ratfunc(const std::string& var) const {
    RatFunc z = RatFunc::variable(var);
    RatFunc acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
}

UniPoly UniPoly::from_poly(const Poly& p, const std::string& var) {
    std::vector<Poly> cs = p.coeffs_in(var);
    std::vector<RatFunc> rf;
    rf.reserve(cs.size());
    for (auto& c : cs) rf.emplace_back(c);
    return UniPoly(std::move(rf));
}

std::string UniPoly::to_string(const std::string& var) const {
    return to_ratfunc(var).to_string();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    UniPoly q, r = a;
    RatFunc lb = b.lc();
    long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        RatFunc c = r.lc() / lb;
        UniPoly t = (UniPoly(c)).mul_power(k);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw MathError("inexact univariate division");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

std::pair<UniPoly, UniPoly> unipair_from_ratfunc(const RatFunc& r, const std::string& var) {
    UniPoly num = UniPoly::from_poly(r.num(), var);
    UniPoly den = UniPoly::from_poly(r.den(), var);
    // RatFunc form is already reduced over Q[all vars]; reduce again over
    // K[var] so that parameter-only content moves into the coefficients.
    UniPoly g = gcd(num, den);
    if (!g.is_zero() && g.degree() > 0) {
        num = exact_quotient(num, g);
        den = exact_quotient(den, g);
    }
    RatFunc dl = den.lc();
    if (!(dl == RatFunc(Rational(1)))) {
        RatFunc inv = RatFunc(Rational(1)) / dl;
        num = inv * num;
        den = inv * den;
    }
    return {num, den};
}

}  // namespace galint
