#include "galint/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "galint/error.hpp"

namespace galint {

bool TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(ExpVec{}, c);
}

Poly Poly::variable(const std::string& name) {
    Poly p;
    p.vars_ = {name};
    p.terms_.emplace(ExpVec{1}, Rational(1));
    return p;
}

bool Poly::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw MathError("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

long Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const ExpVec& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0L);
}

long Poly::degree_in(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
    return d;
}

bool Poly::depends_on(const std::string& v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

Rational Poly::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

    std::vector<std::string> nv;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            nv.push_back(vars_[i]);
            keep.push_back(i);
        }
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

// Re-expresses both polynomials over the sorted union of their variables.
std::pair<Poly, Poly> aligned(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    auto remap = [&](const Poly& p) {
        Poly out;
        out.vars_ = u;
        std::vector<std::size_t> pos(p.vars_.size());
        for (std::size_t i = 0; i < p.vars_.size(); ++i)
            pos[i] = static_cast<std::size_t>(
                std::lower_bound(u.begin(), u.end(), p.vars_[i]) - u.begin());
        for (const auto& [e, c] : p.terms_) {
            ExpVec ne(u.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            out.terms_.emplace(std::move(ne), c);
        }
        return out;
    };
    return {remap(a), remap(b)};
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    auto [x, y] = aligned(a, b);
    for (const auto& [e, c] : y.terms_) {
        auto [it, fresh] = x.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    x.prune();
    return x;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    auto [x, y] = aligned(a, b);
    Poly out;
    out.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            ExpVec e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto [it, fresh] = out.terms_.emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    }
    out.prune();
    return out;
}

Poly operator*(const Rational& c, const Poly& p) {
    if (c == 0) return Poly();
    Poly out = p;
    for (auto& [e, k] : out.terms_) k *= c;
    return out;
}

Poly operator*(const Poly& p, const Rational& c) { return c * p; }

Poly Poly::derivative(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return Poly();
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    Poly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        ExpVec ne = e;
        ne[idx] -= 1;
        out.terms_.emplace(std::move(ne), c * Rational(e[idx]));
    }
    out.prune();
    return out;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw MathError("negative exponent on polynomial");
    Poly out(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return out;
}

Rational Poly::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) g = rational_gcd(g, c);
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    Rational g = content();
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c /= g;
    return out;
}

Poly Poly::eval_partial(const std::map<std::string, Rational>& point) const {
    std::vector<std::size_t> bound_idx;
    std::vector<Rational> bound_val;
    std::vector<std::string> free_vars;
    std::vector<std::size_t> free_idx;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it != point.end()) {
            bound_idx.push_back(i);
            bound_val.push_back(it->second);
        } else {
            free_vars.push_back(vars_[i]);
            free_idx.push_back(i);
        }
    }
    if (bound_idx.empty()) return *this;
    Poly out;
    out.vars_ = free_vars;
    for (const auto& [e, c] : terms_) {
        Rational k = c;
        for (std::size_t j = 0; j < bound_idx.size(); ++j)
            k *= rational_pow(bound_val[j], e[bound_idx[j]]);
        if (k == 0) continue;
        ExpVec ne(free_idx.size());
        for (std::size_t j = 0; j < free_idx.size(); ++j) ne[j] = e[free_idx[j]];
        auto [it, fresh] = out.terms_.emplace(std::move(ne), k);
        if (!fresh) it->second += k;
    }
    out.prune();
    return out;
}

Rational Poly::eval(const std::map<std::string, Rational>& point) const {
    Poly r = eval_partial(point);
    if (!r.is_constant()) throw MathError("unbound variable in full evaluation");
    return r.constant_value();
}

std::vector<Poly> Poly::coeffs_in(const std::string& v) const {
    long d = degree_in(v);
    if (!depends_on(v)) return {*this};
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    std::vector<Poly> out(static_cast<std::size_t>(d) + 1);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (i != idx) rest.push_back(vars_[i]);
    for (auto& p : out) p.vars_ = rest;
    for (const auto& [e, c] : terms_) {
        ExpVec ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx) ne.push_back(e[i]);
        out[static_cast<std::size_t>(e[idx])].terms_.emplace(std::move(ne), c);
    }
    for (auto& p : out) p.prune();
    return out;
}

Poly Poly::from_coeffs_in(const std::string& v, const std::vector<Poly>& cs) {
    Poly out;
    Poly x = Poly::variable(v);
    for (std::size_t i = cs.size(); i-- > 0;) out = out * x + cs[i];
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string mono;
        bool first_factor_powered = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (mono.empty()) first_factor_powered = (e[i] != 1);
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (mono.empty())
            body = rational_to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = rational_to_string(mag) + "*" + mono;
        if (first) {
            if (c < 0) {
                os << "-";
                // In the expression grammar a leading '-' binds below '^',
                // so "-x^2" would reparse as (-x)^2; force the coefficient.
                if (mag == 1 && first_factor_powered) body = "1*" + mono;
            }
            os << body;
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ") << body;
        }
    }
    return os.str();
}

namespace {

// -------- gcd machinery: subresultant PRS on univariate views --------

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    Rational lc = p.leading_coeff();
    return Rational(1 / lc) * p;
}

Poly lc_in(const Poly& p, const std::string& v) {
    auto cs = p.coeffs_in(v);
    return cs.back();
}

// gcd of all v-coefficients of p (the content of p with respect to v).
Poly content_in(const Poly& p, const std::string& v) {
    Poly g;
    for (const auto& c : p.coeffs_in(v)) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly exact_div(const Poly& a, const Poly& b, const char* where) {
    auto q = divide_exact(a, b);
    if (!q) throw MathError(std::string("inexact division in ") + where);
    return *q;
}

// Pseudo-remainder of a by b with respect to v: lc(b)^(da-db+1) * a = q*b + r.
Poly prem(const Poly& a, const Poly& b, const std::string& v) {
    long da = a.degree_in(v), db = b.degree_in(v);
    if (a.is_zero() || da < db) return a;
    Poly lb = lc_in(b, v);
    Poly r = a;
    long steps = da - db + 1;
    long performed = 0;
    Poly x = Poly::variable(v);
    while (!r.is_zero() && r.degree_in(v) >= db) {
        long dr = r.degree_in(v);
        Poly lr = lc_in(r, v);
        r = lb * r - lr * x.pow(dr - db) * b;
        ++performed;
    }
    for (; performed < steps; ++performed) r = lb * r;
    return r;
}

Poly subresultant_gcd(Poly f, Poly g, const std::string& v) {
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    Poly h(Rational(1)), s(Rational(1));
    while (true) {
        long delta = f.degree_in(v) - g.degree_in(v);
        Poly r = prem(f, g, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return Poly(Rational(1));
        f = g;
        Poly denom = s * h.pow(delta);
        g = exact_div(r, denom, "subresultant PRS");
        s = lc_in(f, v);
        if (delta > 0) h = exact_div(s.pow(delta), h.pow(delta - 1), "subresultant PRS");
    }
    return exact_div(g, content_in(g, v), "primitive part");
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));

    std::vector<std::string> u;
    std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                   std::back_inserter(u));
    const std::string& v = u.front();

    if (!a.depends_on(v) || !b.depends_on(v)) {
        // v occurs in only one of them: gcd(a, b) = gcd(cont_v(one), other).
        const Poly& has = a.depends_on(v) ? a : b;
        const Poly& other = a.depends_on(v) ? b : a;
        return gcd(content_in(has, v), other);
    }

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly cont = gcd(ca, cb);
    Poly pa = exact_div(a, ca, "content split");
    Poly pb = exact_div(b, cb, "content split");
    Poly prim = subresultant_gcd(pa, pb, v);
    return monic(cont * prim);
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    if (a.is_zero()) return Poly();
    const Rational cb = b.terms().rbegin()->second;
    Poly q;
    Poly r = a;
    while (!r.is_zero()) {
        auto [xr, yr] = aligned(r, b);
        const ExpVec& er = xr.terms().rbegin()->first;
        const ExpVec& eb = yr.terms().rbegin()->first;
        ExpVec e(er.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0) return std::nullopt;
        }
        Poly t(Rational(xr.terms().rbegin()->second / cb));
        std::size_t vi = 0;
        for (const auto& var : xr.vars()) {
            if (e[vi] > 0) t *= Poly::variable(var).pow(e[vi]);
            ++vi;
        }
        q += t;
        r = r - t * b;
    }
    return q;
}

std::vector<std::pair<Poly, long>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, long>> out;
    if (p.is_zero() || p.is_constant()) return out;
    const std::string v = p.vars().front();

    Poly cont = content_in(p, v);
    Poly prim = *divide_exact(p, cont);
    out = squarefree_decomposition(cont);

    // Yun's algorithm on the primitive part with respect to v.
    Poly dp = prim.derivative(v);
    Poly a0 = gcd(prim, dp);
    Poly b = *divide_exact(prim, a0);
    Poly c = *divide_exact(dp, a0);
    Poly d = c - b.derivative(v);
    long i = 1;
    while (!b.is_constant()) {
        Poly f = gcd(b, d);
        if (!f.is_constant()) out.emplace_back(f.primitive_part(), i);
        b = *divide_exact(b, f);
        c = *divide_exact(d, f);
        d = c - b.derivative(v);
        ++i;
        if (i > 512) throw MathError("squarefree decomposition did not terminate");
    }
    return out;
}

std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly();
    if (p.is_constant()) {
        auto r = rational_sqrt(p.constant_value());
        if (!r) return std::nullopt;
        return Poly(*r);
    }
    if (p.leading_coeff() < 0) return std::nullopt;
    auto decomp = squarefree_decomposition(p);
    Poly root(Rational(1));
    Poly rebuilt(Rational(1));
    for (const auto& [f, m] : decomp) {
        if (m % 2 != 0) return std::nullopt;
        root *= f.pow(m / 2);
        rebuilt *= f.pow(m);
    }
    auto scalar = divide_exact(p, rebuilt);
    if (!scalar || !scalar->is_constant()) return std::nullopt;
    auto s = rational_sqrt(scalar->constant_value());
    if (!s) return std::nullopt;
    Poly result = Poly(*s) * root;
    if (result * result != p) return std::nullopt;
    return result;
}

}  // namespace galint
