#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galint/moebius.hpp"
#include "galint/registry.hpp"
#include "galint/unipoly.hpp"

namespace galint {

struct SolverOptions {
    long fallback_degree = 12;  // bound used when a resonance test is undecidable
};

struct SolverTranscript {
    std::string universal_denominator;
    std::vector<long> chain_lengths;     // dispersion values consumed by the denominator
    long numerator_bound = -1;
    std::vector<std::string> resonance_notes;
    bool parameter_fallback = false;     // an undecidable bound fell back to the option
    std::vector<std::string> used_facts;
    std::vector<std::string> notes;
};

struct FirstOrderSolution {
    bool found = false;
    RatFunc particular;
    std::vector<RatFunc> homogeneous;  // basis of rational homogeneous solutions in bounds
    SolverTranscript transcript;
};

// Rational solutions u of  u(phi z) * d(z) = a(z) * u(z) + b(z)  for phi a
// translation or dilation. Returns the affine solution set (particular plus
// homogeneous basis) when one exists within the certified universal
// denominator and numerator degree bound, otherwise found = false with the
// bounds recorded in the transcript. Every returned solution back-substitutes
// to zero, which is asserted before returning.
FirstOrderSolution solve_first_order(const RatFunc& a, const RatFunc& b, const RatFunc& d,
                                     const MoebiusTransform& phi,
                                     const AssumptionRegistry& reg = AssumptionRegistry(),
                                     const SolverOptions& opts = SolverOptions(),
                                     const std::string& var = "z");

}  // namespace galint
