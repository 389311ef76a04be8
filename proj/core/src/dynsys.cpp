#include "galint/dynsys.hpp"

#include "galint/error.hpp"

namespace galint {

std::map<std::string, RatFunc> RationalMap::bindings() const {
    std::map<std::string, RatFunc> b;
    for (std::size_t i = 0; i < variables.size(); ++i) b[variables[i]] = components[i];
    return b;
}

void validate(const RationalMap& f) {
    if (f.variables.empty()) throw InputError("map has no variables");
    if (f.variables.size() != f.components.size())
        throw InputError("map arity mismatch: " + std::to_string(f.variables.size()) +
                         " variables, " + std::to_string(f.components.size()) + " components");
}

RfMatrix jacobian(const RationalMap& f) {
    validate(f);
    long m = static_cast<long>(f.variables.size());
    RfMatrix out(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            out.at(i, j) = f.components[static_cast<std::size_t>(i)].derivative(
                f.variables[static_cast<std::size_t>(j)]);
    return out;
}

bool is_symplectic(const RationalMap& f, const SymplecticStructure& s) {
    validate(f);
    if (static_cast<long>(f.variables.size()) != s.dimension())
        throw InputError("dimension mismatch between map and symplectic structure");
    RfMatrix df = jacobian(f);
    RfMatrix j = symplectic_form(s.n);
    return transpose(df) * j * df == j;
}

RatFunc poisson_bracket(const RatFunc& h1, const RatFunc& h2, const SymplecticStructure& s,
                        const std::vector<std::string>& vars) {
    if (static_cast<long>(vars.size()) != s.dimension())
        throw InputError("phase variable list does not match the symplectic dimension");
    RatFunc acc;
    for (long i = 0; i < s.n; ++i) {
        const std::string& q = vars[static_cast<std::size_t>(i)];
        const std::string& p = vars[static_cast<std::size_t>(s.n + i)];
        acc += h1.derivative(q) * h2.derivative(p) - h1.derivative(p) * h2.derivative(q);
    }
    return acc;
}

VectorFieldSym symplectic_gradient(const RatFunc& h, const SymplecticStructure& s,
                                   const std::vector<std::string>& vars) {
    if (static_cast<long>(vars.size()) != s.dimension())
        throw InputError("phase variable list does not match the symplectic dimension");
    VectorFieldSym x(vars.size());
    for (long i = 0; i < s.n; ++i) {
        x[static_cast<std::size_t>(i)] = h.derivative(vars[static_cast<std::size_t>(s.n + i)]);
        x[static_cast<std::size_t>(s.n + i)] = -h.derivative(vars[static_cast<std::size_t>(i)]);
    }
    return x;
}

bool is_first_integral(const RatFunc& h, const RationalMap& f) {
    validate(f);
    return h.substitute(f.bindings()) == h;
}

long functional_rank(const std::vector<RatFunc>& hs, const std::vector<std::string>& vars) {
    if (hs.empty()) throw InputError("functional_rank of an empty list");
    RfMatrix jac(static_cast<long>(hs.size()), static_cast<long>(vars.size()));
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j)
            jac.at(static_cast<long>(i), static_cast<long>(j)) = hs[i].derivative(vars[j]);
    return rank(jac);
}

IntegrabilityReport check_isotropic_integrability(const RationalMap& f,
                                                  const std::vector<RatFunc>& hs, long ell,
                                                  const SymplecticStructure& s) {
    validate(f);
    if (ell < 0 || ell > s.n) throw InputError("ell must satisfy 0 <= ell <= n");
    if (static_cast<long>(hs.size()) != s.n + ell)
        throw InputError("expected n + ell = " + std::to_string(s.n + ell) +
                         " first integrals, got " + std::to_string(hs.size()));

    IntegrabilityReport rep;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        bool ok = false;
        try {
            ok = is_first_integral(hs[i], f);
        } catch (const MathError& e) {
            rep.failures.push_back("H_" + std::to_string(i + 1) + ": " + e.what());
        }
        rep.first_integral_ok.push_back(ok);
        rep.trivial_constant.push_back(hs[i].is_constant());
        if (!ok)
            rep.failures.push_back("H_" + std::to_string(i + 1) + " is not a first integral");
    }

    rep.rank = functional_rank(hs, f.variables);
    rep.rank_ok = rep.rank == s.n + ell;
    if (!rep.rank_ok)
        rep.failures.push_back("functional rank " + std::to_string(rep.rank) + " != " +
                               std::to_string(s.n + ell));

    // {H_i, H_j} = 0 for i in [1, n+ell], j in [1, n-ell]: this is exactly
    // dH_i(X_{H_j}) = 0, which with the rank count certifies that the common
    // kernel distribution is spanned by the first n-ell gradients.
    for (long i = 0; i < s.n + ell; ++i)
        for (long j = 0; j < s.n - ell; ++j) {
            RatFunc br = poisson_bracket(hs[static_cast<std::size_t>(i)],
                                         hs[static_cast<std::size_t>(j)], s, f.variables);
            if (!br.is_zero()) {
                rep.brackets_ok = false;
                rep.failures.push_back("{H_" + std::to_string(i + 1) + ", H_" +
                                       std::to_string(j + 1) + "} != 0");
            }
        }

    bool all_fi = true;
    for (bool b : rep.first_integral_ok) all_fi = all_fi && b;
    rep.verdict = all_fi && rep.rank_ok && rep.brackets_ok;
    return rep;
}

}  // namespace galint
