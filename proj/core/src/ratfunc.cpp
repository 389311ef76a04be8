#include "galint/ratfunc.hpp"

#include <algorithm>

#include "galint/error.hpp"

namespace galint {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw MathError("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFunc normalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw MathError("rational function is not constant");
    return num_.is_zero() ? Rational(0)
                          : num_.constant_value() / den_.constant_value();
}

std::vector<std::string> RatFunc::vars() const {
    std::vector<std::string> u;
    std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(),
                   den_.vars().end(), std::back_inserter(u));
    return u;
}

bool RatFunc::depends_on(const std::string& v) const {
    return num_.depends_on(v) || den_.depends_on(v);
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw MathError("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(Rational(1));
    if (e < 0) {
        if (is_zero()) throw MathError("0 raised to a negative power");
        return RatFunc(den_.pow(-e), num_.pow(-e));
    }
    return RatFunc(num_.pow(e), den_.pow(e));
}

RatFunc RatFunc::derivative(const std::string& v) const {
    // (n/d)' = (n'd - nd')/d^2
    Poly n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RatFunc(n, den_ * den_);
}

namespace {

RatFunc eval_poly_at(const Poly& p, const std::map<std::string, RatFunc>& bindings) {
    // Powers of each bound value are cached per variable.
    std::vector<std::string> vars = p.vars();
    std::vector<const RatFunc*> vals(vars.size(), nullptr);
    std::vector<std::vector<RatFunc>> powers(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = bindings.find(vars[i]);
        if (it != bindings.end()) vals[i] = &it->second;
    }
    RatFunc acc;
    for (const auto& [e, c] : p.terms()) {
        RatFunc term{c};
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (vals[i] == nullptr) {
                term *= RatFunc(Poly::variable(vars[i]).pow(e[i]));
                continue;
            }
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(RatFunc(Rational(1)));
            while (static_cast<long>(pw.size()) <= e[i]) pw.push_back(pw.back() * *vals[i]);
            term *= pw[static_cast<std::size_t>(e[i])];
        }
        acc += term;
    }
    return acc;
}

}  // namespace

RatFunc RatFunc::substitute(const std::map<std::string, RatFunc>& bindings) const {
    RatFunc n = eval_poly_at(num_, bindings);
    RatFunc d = eval_poly_at(den_, bindings);
    if (d.is_zero()) throw MathError("substitution makes the denominator vanish identically");
    return n / d;
}

std::optional<Rational> RatFunc::eval(const std::map<std::string, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) return std::nullopt;
    return num_.eval(point) / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    // A bare denominator is only safe when it is a single factor ("y" or
    // "y^2"); "a/x*y" would reparse as (a/x)*y.
    std::string d = den_.to_string();
    bool den_single_factor = false;
    if (den_.terms().size() == 1) {
        const auto& e = den_.terms().begin()->first;
        long nfac = 0;
        for (int k : e)
            if (k > 0) ++nfac;
        den_single_factor = (nfac <= 1) && den_.leading_coeff() == 1;
    }
    if (!den_single_factor) d = "(" + d + ")";
    return n + "/" + d;
}

long epsilon_valuation(const RatFunc& r, const std::string& eps) {
    if (r.is_zero()) throw MathError("epsilon valuation of zero");
    auto ord = [&](const Poly& p) {
        auto cs = p.coeffs_in(eps);
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (!cs[i].is_zero()) return static_cast<long>(i);
        return 0L;
    };
    return ord(r.num()) - ord(r.den());
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& r) {
    auto sn = poly_sqrt(r.num());
    if (!sn) return std::nullopt;
    auto sd = poly_sqrt(r.den());
    if (!sd) return std::nullopt;
    return RatFunc(*sn, *sd);
}

std::vector<RatFunc> epsilon_expansion(const RatFunc& r, const std::string& eps,
                                       long order) {
    if (order < 0) throw InputError("negative expansion order");
    std::vector<Poly> N = r.num().coeffs_in(eps);
    std::vector<Poly> D = r.den().coeffs_in(eps);
    if (D[0].is_zero())
        throw MathError("pole at " + eps + " = 0; split into numerator and denominator first");
    RatFunc d0inv = RatFunc(Rational(1)) / RatFunc(D[0]);
    std::vector<RatFunc> coeffs(static_cast<std::size_t>(order) + 1);
    for (long k = 0; k <= order; ++k) {
        RatFunc acc = k < static_cast<long>(N.size()) ? RatFunc(N[static_cast<std::size_t>(k)])
                                                      : RatFunc();
        for (long j = 1; j <= k && j < static_cast<long>(D.size()); ++j)
            acc -= RatFunc(D[static_cast<std::size_t>(j)]) * coeffs[static_cast<std::size_t>(k - j)];
        coeffs[static_cast<std::size_t>(k)] = acc * d0inv;
    }
    return coeffs;
}

}  // namespace galint
