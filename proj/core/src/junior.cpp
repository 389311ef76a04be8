#include "galint/junior.hpp"

#include <random>
#include <set>

#include "galint/error.hpp"

namespace galint {

std::vector<std::string> fiber_variables(std::size_t m, const std::string& prefix) {
    std::vector<std::string> out;
    out.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

namespace {

std::string fresh_epsilon(const std::set<std::string>& used) {
    std::string name = "eps";
    while (used.count(name)) name += "_";
    return name;
}

struct JetContext {
    std::string eps;
    std::map<std::string, RatFunc> bindings;  // x_i -> iota_i(z) + eps*Y_i
};

JetContext jet_context(const RationalMap& f, const AdaptedCurve& curve,
                       const std::string& fiber_prefix = "Y") {
    if (f.variables.size() != curve.components.size())
        throw InputError("curve dimension does not match the map");
    std::set<std::string> used(f.variables.begin(), f.variables.end());
    used.insert(curve.var);
    for (const auto& c : curve.components)
        for (const auto& v : c.vars()) used.insert(v);
    auto fibers = fiber_variables(f.variables.size(), fiber_prefix);
    for (const auto& v : fibers) used.insert(v);

    JetContext ctx;
    ctx.eps = fresh_epsilon(used);
    RatFunc eps = RatFunc::variable(ctx.eps);
    for (std::size_t i = 0; i < f.variables.size(); ++i)
        ctx.bindings[f.variables[i]] = curve.components[i] + eps * RatFunc::variable(fibers[i]);
    return ctx;
}

// eps-valuation and the corresponding coefficient of a polynomial part
// F(iota(z) + eps Y); the substituted denominator involves z only.
std::pair<long, RatFunc> leading_jet(const Poly& part, const JetContext& ctx) {
    RatFunc s = RatFunc(part).substitute(ctx.bindings);
    if (s.is_zero()) throw MathError("junior part of the zero function");
    long v = epsilon_valuation(s, ctx.eps);
    std::vector<Poly> cs = s.num().coeffs_in(ctx.eps);
    return {v, RatFunc(cs[static_cast<std::size_t>(v)], s.den())};
}

}  // namespace

long generic_valuation(const RatFunc& h, const RationalMap& f, const AdaptedCurve& curve) {
    if (h.is_zero()) throw MathError("generic valuation of the zero function");
    JetContext ctx = jet_context(f, curve);
    auto [vf, jf] = leading_jet(h.num(), ctx);
    auto [vg, jg] = leading_jet(h.den(), ctx);
    return vf - vg;
}

JuniorPart junior_part(const RatFunc& h, const RationalMap& f, const AdaptedCurve& curve) {
    if (h.is_zero()) throw MathError("junior part of the zero function");
    JetContext ctx = jet_context(f, curve);
    auto [vf, jf] = leading_jet(h.num(), ctx);
    auto [vg, jg] = leading_jet(h.den(), ctx);
    return JuniorPart{vf - vg, jf / jg};
}

bool verify_difference_first_integral(const RatFunc& h, const DifferenceSystem& s,
                                      const std::string& fiber_prefix) {
    long m = s.A.rows;
    auto fibers = fiber_variables(static_cast<std::size_t>(m), fiber_prefix);
    std::map<std::string, RatFunc> bind;
    bind[s.var] = s.phi.apply_var(s.var);
    for (long i = 0; i < m; ++i) {
        RatFunc acc;
        for (long j = 0; j < m; ++j)
            acc += s.A.at(i, j) * RatFunc::variable(fibers[static_cast<std::size_t>(j)]);
        bind[fibers[static_cast<std::size_t>(i)]] = acc;
    }
    return h.substitute(bind) == h;
}

long junior_independence_rank(const std::vector<JuniorPart>& js, std::size_t m,
                              const std::string& curve_var, const std::string& fiber_prefix) {
    if (js.empty()) throw InputError("junior rank of an empty list");
    std::vector<std::string> vars{curve_var};
    for (const auto& y : fiber_variables(m, fiber_prefix)) vars.push_back(y);
    std::vector<RatFunc> exprs;
    exprs.reserve(js.size());
    for (const auto& j : js) exprs.push_back(j.expr);
    return functional_rank(exprs, vars);
}

namespace {

// Enumerates exponent vectors e >= 0 with sum(e) <= budget.
void enumerate_exponents(std::size_t k, long budget, std::vector<long>& cur,
                         std::vector<std::vector<long>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (long e = 0; e <= budget; ++e) {
        cur.push_back(e);
        long used = 0;
        for (long x : cur) used += x;
        if (used <= budget) enumerate_exponents(k, budget, cur, out);
        cur.pop_back();
    }
}

bool is_parameter_constant(const RatFunc& r, const std::string& curve_var,
                           const std::vector<std::string>& fibers) {
    if (r.depends_on(curve_var)) return false;
    for (const auto& y : fibers)
        if (r.depends_on(y)) return false;
    return true;
}

}  // namespace

ZiglinResult ziglin_combination(const std::vector<RatFunc>& fs, const RationalMap& f,
                                const AdaptedCurve& curve, long budget, unsigned long seed) {
    if (fs.empty()) throw InputError("empty input to ziglin_combination");
    ZiglinResult res;
    const std::size_t k = fs.size();
    const std::size_t m = f.variables.size();
    auto fibers = fiber_variables(m);

    std::vector<std::string> fsyms;
    std::vector<RatFunc> fvars;
    for (std::size_t i = 1; i <= k; ++i) {
        fsyms.push_back("F" + std::to_string(i));
        fvars.push_back(RatFunc::variable(fsyms.back()));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff_dist(-3, 3);

    for (std::size_t i = 0; i < k; ++i) {
        RatFunc cand = fs[i];
        RatFunc candP = fvars[i];
        bool accepted = false;
        for (int round = 0; round < 32 && !accepted; ++round) {
            if (cand.is_zero()) break;
            JuniorPart jc = junior_part(cand, f, curve);
            std::vector<JuniorPart> trial = res.juniors;
            trial.push_back(jc);
            if (junior_independence_rank(trial, m, curve.var) ==
                static_cast<long>(trial.size())) {
                res.combinations.push_back(cand);
                res.recombination.push_back(candP);
                res.juniors.push_back(jc);
                accepted = true;
                break;
            }
            // Triangular correction: find a monomial in the accepted juniors
            // with matching valuation and a parameter-constant ratio.
            bool corrected = false;
            std::vector<std::vector<long>> expvecs;
            std::vector<long> cur;
            enumerate_exponents(res.juniors.size(), budget, cur, expvecs);
            for (const auto& e : expvecs) {
                long val = 0;
                for (std::size_t l = 0; l < e.size(); ++l)
                    val += e[l] * res.juniors[l].valuation;
                if (val != jc.valuation) continue;
                RatFunc prod{Rational(1)};
                for (std::size_t l = 0; l < e.size(); ++l)
                    prod *= res.juniors[l].expr.pow(e[l]);
                if (prod.is_zero()) continue;
                RatFunc ratio = jc.expr / prod;
                if (!is_parameter_constant(ratio, curve.var, fibers)) continue;
                // ratio lies in the constant field Q(params), so the
                // correction is a legitimate polynomial recombination.
                RatFunc corr = ratio;
                RatFunc corrP = ratio;
                for (std::size_t l = 0; l < e.size(); ++l) {
                    corr *= res.combinations[l].pow(e[l]);
                    corrP *= res.recombination[l].pow(e[l]);
                }
                cand -= corr;
                candP -= corrP;
                corrected = true;
                break;
            }
            if (corrected) continue;
            // Randomized dense fallback within the budget.
            bool improved = false;
            for (int t = 0; t < 120 && !improved; ++t) {
                std::vector<long> e;
                long total = 0;
                for (std::size_t l = 0; l < res.juniors.size(); ++l) {
                    long x = std::uniform_int_distribution<long>(0, budget)(rng);
                    total += x;
                    e.push_back(x);
                }
                if (total == 0 || total > budget) continue;
                long c = coeff_dist(rng);
                if (c == 0) continue;
                RatFunc corr{Rational(c)};
                RatFunc corrP{Rational(c)};
                for (std::size_t l = 0; l < e.size(); ++l) {
                    corr *= res.combinations[l].pow(e[l]);
                    corrP *= res.recombination[l].pow(e[l]);
                }
                RatFunc next = cand - corr;
                if (next.is_zero()) continue;
                JuniorPart jn = junior_part(next, f, curve);
                std::vector<JuniorPart> t2 = res.juniors;
                t2.push_back(jn);
                if (junior_independence_rank(t2, m, curve.var) ==
                    static_cast<long>(t2.size())) {
                    cand = next;
                    candP = candP - corrP;
                    improved = true;
                }
            }
            if (!improved) break;
        }
        if (!accepted) {
            res.exhausted = true;
            res.note = "budget " + std::to_string(budget) +
                       " exhausted while recombining input " + std::to_string(i + 1);
            break;
        }
    }
    if (!res.juniors.empty())
        res.rank = junior_independence_rank(res.juniors, m, curve.var);
    return res;
}

}  // namespace galint
