#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galint/dynsys.hpp"
#include "galint/moebius.hpp"

namespace galint {

// Rational embedding of the projective line into the chart, z -> iota(z).
// At least one component must be nonconstant.
struct AdaptedCurve {
    std::string var = "z";
    std::vector<RatFunc> components;
};

void validate(const AdaptedCurve& curve);

// Linear difference system Y(phi z) = A(z) Y(z).
struct DifferenceSystem {
    MoebiusTransform phi;
    RfMatrix A;
    bool symplectic = false;
    std::string var = "z";
};

struct AdaptednessResult {
    bool ok = false;
    std::optional<MoebiusTransform> phi;  // the verified (or inferred) transform
    bool inferred = false;
    std::string detail;
};

// Checks f o iota = iota o phi componentwise. When phi is omitted it is
// inferred by solving on the first nonconstant curve component (which must
// be of Moebius degree) and then verified on the rest.
AdaptednessResult verify_adapted(const RationalMap& f, const AdaptedCurve& curve,
                                 const std::optional<MoebiusTransform>& phi);

// A(z) = Df with x -> iota(z); requires verify_adapted to have passed.
// The symplectic flag of the result records is_symplectic(f).
DifferenceSystem variational_system(const RationalMap& f, const AdaptedCurve& curve,
                                    const MoebiusTransform& phi);

// A(z)^T J A(z) = J exactly; throws on odd dimension.
bool verify_symplectic_system(const DifferenceSystem& s);

// A' = (P o phi)^{-1} A P with the same phi. Throws on singular P.
DifferenceSystem gauge_transform(const DifferenceSystem& s, const RfMatrix& P);

}  // namespace galint
