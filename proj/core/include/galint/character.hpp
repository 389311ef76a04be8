#pragma once

#include <array>
#include <string>
#include <vector>

#include "galint/moebius.hpp"
#include "galint/registry.hpp"
#include "galint/unipoly.hpp"

namespace galint {

// Factorization of a univariate polynomial over K = Q(params): unit *
// z^z_power * prod (z - rho_i)^m_i * prod block_j^n_j, where blocks are the
// monic factors of degree >= 2 that do not split with linear/quadratic root
// extraction over K.
struct ZFactorization {
    RatFunc unit;
    long z_power = 0;
    std::vector<std::pair<RatFunc, long>> roots;   // rho != 0
    std::vector<std::pair<UniPoly, long>> blocks;  // monic, degree >= 2
};

ZFactorization factor_unipoly(const UniPoly& p);

// Squarefree decomposition over K[z] (Yun); factors are monic and pairwise
// coprime, p = lc * prod f_i^{m_i}.
std::vector<std::pair<UniPoly, long>> squarefree_unipoly(const UniPoly& p);

// Class of r in K(z)* modulo {c' (g o phi)/g : c' trivial}: the rank-1
// Galois datum of the equation y(phi z) = r(z) y(z). The stored witness
// satisfies  r = constant * z^z_exp * (g o phi)/g * prod factor^mult
// exactly (z_exp is only used for dilations).
struct CharacterClass {
    bool translation = false;
    RatFunc step;  // h or q
    struct Row {
        UniPoly factor;  // monic representative, no two rows in the same orbit
        long mult = 0;
    };
    std::vector<Row> divisor;
    long z_exp = 0;
    RatFunc constant;
    RatFunc witness_g;
    std::vector<std::string> conditional_notes;  // undeclared-genericity uses
    std::string var = "z";
};

CharacterClass character_class(const RatFunc& r, const MoebiusTransform& phi,
                               const AssumptionRegistry& reg, const std::string& var = "z");

// Joint reduction of two functions to shared orbit representatives; used by
// the rank-2 classifier so that the relation lattice can be read off rows.
struct CharacterPair {
    bool translation = false;
    RatFunc step;
    struct Row {
        UniPoly factor;
        std::array<long, 2> mult{0, 0};
    };
    std::vector<Row> rows;
    std::array<long, 2> z_exp{0, 0};
    std::array<RatFunc, 2> constant;
    std::array<RatFunc, 2> witness_g;
    std::vector<std::string> conditional_notes;
    std::string var = "z";
};

CharacterPair character_pair(const RatFunc& ra, const RatFunc& rd,
                             const MoebiusTransform& phi, const AssumptionRegistry& reg,
                             const std::string& var = "z");

// Triviality of the class modulo the registry: divisor empty, z_exp = 0 and
// residual constant trivial (in q^Z for dilations, equal to 1 for
// translations).
Decision character_is_trivial(const CharacterClass& c, const AssumptionRegistry& reg);

}  // namespace galint
