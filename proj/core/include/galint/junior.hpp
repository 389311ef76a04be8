#pragma once

#include <string>
#include <vector>

#include "galint/varcurve.hpp"

namespace galint {

// Leading directional behaviour of a rational function along a curve:
// valuation nu and the coefficient of eps^nu in H(iota(z) + eps Y). For H
// regular along the curve the expression is polynomial in Y and
// Y-homogeneous of degree nu; for quotients it is F°/G°.
struct JuniorPart {
    long valuation = 0;
    RatFunc expr;
};

// Fiber variable names Y1..Ym attached to a curve of dimension m.
std::vector<std::string> fiber_variables(std::size_t m, const std::string& prefix = "Y");

// nu_iota(H) = min{k : D^k H(iota) not identically 0}, extended to quotients
// by nu(F/G) = nu(F) - nu(G). Throws MathError on H = 0.
long generic_valuation(const RatFunc& h, const RationalMap& f, const AdaptedCurve& curve);

// The generic junior part H°_iota. Independent of the F/G decomposition.
JuniorPart junior_part(const RatFunc& h, const RationalMap& f, const AdaptedCurve& curve);

// First integral of the difference system: h(phi z, A(z) Y) = h(z, Y).
bool verify_difference_first_integral(const RatFunc& h, const DifferenceSystem& s,
                                      const std::string& fiber_prefix = "Y");

// Functional rank of the junior expressions in the variables (z, Y1..Ym).
long junior_independence_rank(const std::vector<JuniorPart>& js, std::size_t m,
                              const std::string& curve_var = "z",
                              const std::string& fiber_prefix = "Y");

struct ZiglinResult {
    std::vector<RatFunc> combinations;  // G_i, rational functions of the phase variables
    // P_i as polynomials in the placeholder symbols F1..Fk, with coefficients
    // from the constant field Q(params).
    std::vector<RatFunc> recombination;
    std::vector<JuniorPart> juniors;
    long rank = 0;
    bool exhausted = false;
    std::string note;
};

// Searches polynomial combinations G_i = P_i(F_1..F_k) whose junior parts
// along the curve are functionally independent. Triangular corrections
// G_i = F_i - c * prod G_j^{e_j} are tried first, then a small randomized
// dense search; combinations stay within total degree <= budget. Budget
// exhaustion is reported, never silently swallowed.
ZiglinResult ziglin_combination(const std::vector<RatFunc>& fs, const RationalMap& f,
                                const AdaptedCurve& curve, long budget, unsigned long seed);

}  // namespace galint
