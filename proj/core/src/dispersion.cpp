#include "galint/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "galint/error.hpp"
#include "galint/unipoly.hpp"

namespace galint {

namespace {

double approx(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

// Cauchy-style bound on the magnitude of the roots of a rational univariate
// polynomial; used only to window the candidate search.
double root_bound(const std::vector<Rational>& cs) {
    double lead = std::fabs(approx(cs.back()));
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
        m = std::max(m, std::fabs(approx(cs[i])) / lead);
    return 1.0 + m;
}

// Smallest magnitude of a nonzero root (reciprocal bound on the reversed
// polynomial, ignoring the z^v factor).
double root_floor(const std::vector<Rational>& cs) {
    std::size_t lo = 0;
    while (lo < cs.size() && cs[lo] == 0) ++lo;
    std::vector<Rational> rev(cs.begin() + static_cast<long>(lo), cs.end());
    std::reverse(rev.begin(), rev.end());
    if (rev.size() <= 1) return 1.0;
    double b = root_bound(rev);
    return 1.0 / b;
}

std::vector<Rational> spec_coeffs(const Poly& p, const std::string& var,
                                  const std::map<std::string, Rational>& point) {
    Poly q = p.eval_partial(point);
    std::vector<Poly> cs = q.coeffs_in(var);
    std::vector<Rational> out;
    for (auto& c : cs) {
        if (!c.is_constant()) throw MathError("incomplete specialization");
        out.push_back(c.constant_value());
    }
    return out;
}

UniPoly from_rationals(const std::vector<Rational>& cs) {
    std::vector<RatFunc> rf;
    rf.reserve(cs.size());
    for (const auto& c : cs) rf.emplace_back(c);
    return UniPoly(std::move(rf));
}

constexpr long kCandidateCap = 4096;

}  // namespace

std::set<long> dispersion_set(const Poly& p, const Poly& r, const MoebiusTransform& phi,
                              const std::string& var) {
    if (p.is_zero() || r.is_zero()) throw InputError("dispersion of a zero polynomial");
    PhiNormalForm nf = phi_normal_form(phi);

    MoebiusClass cls = classify_moebius(phi);
    if (cls.periodic) throw InputError("dispersion is not defined for periodic phi");

    // Collect the parameters to specialize.
    std::set<std::string> params;
    for (const auto& v : p.vars())
        if (v != var) params.insert(v);
    for (const auto& v : r.vars())
        if (v != var) params.insert(v);
    for (const auto& v : nf.step.vars()) params.insert(v);

    long dp = p.degree_in(var), dr = r.degree_in(var);

    std::set<long> candidates;
    std::mt19937_64 rng(0x5d15bull);
    std::uniform_int_distribution<long> num_dist(2, 199);
    std::uniform_int_distribution<long> den_dist(1, 7);

    const int samples = params.empty() ? 1 : 3;
    for (int s = 0; s < samples; ++s) {
        std::map<std::string, Rational> point;
        std::vector<Rational> pc, rc;
        Rational step;
        bool good = false;
        for (int attempt = 0; attempt < 64 && !good; ++attempt) {
            point.clear();
            for (const auto& name : params)
                point[name] = Rational(num_dist(rng), den_dist(rng));
            try {
                pc = spec_coeffs(p, var, point);
                rc = spec_coeffs(r, var, point);
            } catch (const MathError&) {
                continue;
            }
            if (static_cast<long>(pc.size()) - 1 != dp) continue;
            if (static_cast<long>(rc.size()) - 1 != dr) continue;
            auto sv = nf.step.eval(point);
            if (!sv) continue;
            step = *sv;
            if (step == 0) continue;
            if (!nf.translation && (step == 1 || step == -1)) continue;
            good = true;
        }
        if (!good) throw MathError("could not specialize parameters for dispersion");

        long K;
        if (nf.translation) {
            double window = root_bound(pc) + root_bound(rc);
            K = static_cast<long>(window / std::fabs(approx(step))) + 1;
        } else {
            double hi = root_bound(pc) * (1.0 / root_floor(rc));
            double lq = std::fabs(std::log(std::fabs(approx(step))));
            K = static_cast<long>(std::fabs(std::log(hi)) / std::max(lq, 1e-9)) + 1;
        }
        K = std::min(K, kCandidateCap);

        UniPoly pu = from_rationals(pc);
        UniPoly ru = from_rationals(rc);
        for (long k = 0; k <= K; ++k) {
            UniPoly shifted =
                nf.translation
                    ? ru.compose_affine(RatFunc(Rational(1)), RatFunc(Rational(k) * step))
                    : ru.compose_affine(RatFunc(rational_pow(step, k)), RatFunc());
            UniPoly g = gcd(pu, shifted);
            if (!g.is_zero() && g.degree() > 0) candidates.insert(k);
        }
    }

    // Exact verification over the symbolic field.
    std::set<long> out;
    RatFunc z = RatFunc::variable(var);
    for (long k : candidates) {
        RatFunc phik = phi.power(k).apply(z);
        RatFunc rk = RatFunc(r).substitute({{var, phik}});
        Poly g = gcd(p, rk.num());
        if (g.degree_in(var) >= 1) out.insert(k);
    }
    return out;
}

}  // namespace galint
