#pragma once

#include <set>
#include <string>

#include "galint/moebius.hpp"
#include "galint/poly.hpp"

namespace galint {

// All k >= 0 such that gcd(p(z), r(phi^k z)) is nonconstant in z, for phi a
// translation z -> z+h or a dilation z -> qz (non-periodic). Candidate k are
// generated from several rational specializations of the parameters and each
// candidate is then verified exactly over the symbolic field, so the result
// carries no probabilistic error on the "k present" side.
std::set<long> dispersion_set(const Poly& p, const Poly& r, const MoebiusTransform& phi,
                              const std::string& var = "z");

}  // namespace galint
