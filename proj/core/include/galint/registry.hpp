#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galint/ratfunc.hpp"

namespace galint {

// Declared facts about the position of the symbolic parameters. The tool
// never assumes a parameter relation silently: every classification decision
// that depends on parameter position consults the registry and echoes the
// facts it used.
//
// Multiplicative "general position" reading of the facts:
//   nonzero(e)                    e != 0
//   not_root_of_unity(e)          e^k != 1 for all k >= 1
//   not_in_power_lattice(e, b)    e^n not in b^Z for all n != 0
//   independent_multiplicative(e1, e2, b)
//                                 e1^m e2^n in b^Z implies m = n = 0
struct Fact {
    enum class Kind { Nonzero, NotRootOfUnity, NotInPowerLattice, IndependentMultiplicative };
    Kind kind;
    RatFunc e1;
    RatFunc e2;    // IndependentMultiplicative only
    RatFunc base;  // power-lattice facts only
    std::string describe() const;
};

enum class Truth { Yes, No, Unknown };

struct Decision {
    Truth truth = Truth::Unknown;
    std::optional<long> exponent;  // witness j when proving c = base^j
    std::vector<std::string> used_facts;
    std::string note;

    bool yes() const { return truth == Truth::Yes; }
    bool no() const { return truth == Truth::No; }
    bool unknown() const { return truth == Truth::Unknown; }
};

// Symbolic small-exponent test: the j with c = base^j, |j| <= bound, if any.
std::optional<long> as_power(const RatFunc& c, const RatFunc& base, long bound = 64);

class AssumptionRegistry {
public:
    AssumptionRegistry() = default;
    explicit AssumptionRegistry(std::vector<Fact> facts);  // throws on inconsistency

    const std::vector<Fact>& facts() const { return facts_; }

    // Is c in base^Z (as complex numbers, given the declared facts)?
    Decision in_power_lattice(const RatFunc& c, const RatFunc& base) const;

    // Is c equal to 1?
    Decision is_one(const RatFunc& c) const;

    // Is e nonzero?
    Decision is_nonzero(const RatFunc& e) const;

    // Is e a root of unity?
    Decision is_root_of_unity(const RatFunc& e) const;

private:
    std::vector<Fact> facts_;
};

}  // namespace galint
