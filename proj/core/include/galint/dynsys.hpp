#pragma once

#include <string>
#include <vector>

#include "galint/matrix.hpp"

namespace galint {

// Rational self-map of an affine chart, f : C^m --> C^m. Components are
// indexed like the variable list. Birationality is not verified globally;
// dominance is checked lazily through det Df != 0 where needed.
struct RationalMap {
    std::vector<std::string> variables;
    std::vector<RatFunc> components;
    bool symplectic_claimed = false;
    std::vector<std::string> parameters;

    std::map<std::string, RatFunc> bindings() const;
};

// Canonical symplectic structure on C^{2n}: variables ordered as
// (positions, momenta), J = [[0, I], [-I, 0]].
struct SymplecticStructure {
    long n = 1;
    long dimension() const { return 2 * n; }
};

using VectorFieldSym = std::vector<RatFunc>;

void validate(const RationalMap& f);

RfMatrix jacobian(const RationalMap& f);

// (Df)^T J (Df) = J as an exact matrix identity.
bool is_symplectic(const RationalMap& f, const SymplecticStructure& s);

// {h1, h2} with the convention {x_i, x_{n+i}} = 1.
RatFunc poisson_bracket(const RatFunc& h1, const RatFunc& h2, const SymplecticStructure& s,
                        const std::vector<std::string>& vars);

// X_h with dh = omega(X_h, .): X_h = J grad h under the fixed convention.
VectorFieldSym symplectic_gradient(const RatFunc& h, const SymplecticStructure& s,
                                   const std::vector<std::string>& vars);

// h o f = h, exactly. Throws MathError if f maps into the polar locus of h.
bool is_first_integral(const RatFunc& h, const RationalMap& f);

// Rank of the Jacobian [dH_i/dx_j] over the rational function field.
long functional_rank(const std::vector<RatFunc>& hs, const std::vector<std::string>& vars);

struct IntegrabilityReport {
    std::vector<bool> first_integral_ok;
    std::vector<bool> trivial_constant;
    long rank = 0;
    bool rank_ok = false;
    bool brackets_ok = true;
    std::vector<std::string> failures;
    bool verdict = false;
};

// Verifies the isotropic (non-commutative) integrability data: |Hs| = n+ell
// first integrals, functional rank n+ell, and {H_i, H_j} = 0 for all
// i in [1, n+ell], j in [1, n-ell].
IntegrabilityReport check_isotropic_integrability(const RationalMap& f,
                                                  const std::vector<RatFunc>& hs, long ell,
                                                  const SymplecticStructure& s);

}  // namespace galint
