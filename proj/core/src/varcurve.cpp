#include "galint/varcurve.hpp"

#include "galint/error.hpp"

namespace galint {

void validate(const AdaptedCurve& curve) {
    if (curve.components.empty()) throw InputError("curve has no components");
    bool nondegenerate = false;
    for (const auto& c : curve.components)
        if (c.depends_on(curve.var)) nondegenerate = true;
    if (!nondegenerate)
        throw InputError("degenerate curve: every component is constant");
}

namespace {

std::map<std::string, RatFunc> curve_bindings(const RationalMap& f, const AdaptedCurve& curve) {
    if (f.components.size() != curve.components.size())
        throw InputError("curve dimension does not match the map");
    std::map<std::string, RatFunc> b;
    for (std::size_t i = 0; i < f.variables.size(); ++i)
        b[f.variables[i]] = curve.components[i];
    return b;
}

}  // namespace

AdaptednessResult verify_adapted(const RationalMap& f, const AdaptedCurve& curve,
                                 const std::optional<MoebiusTransform>& phi) {
    validate(f);
    validate(curve);
    AdaptednessResult res;
    auto bind = curve_bindings(f, curve);

    std::vector<RatFunc> f_iota;
    for (const auto& comp : f.components) f_iota.push_back(comp.substitute(bind));

    MoebiusTransform candidate = MoebiusTransform::identity();
    if (phi) {
        candidate = *phi;
    } else {
        // Solve iota_j(phi(z)) = (f o iota)_j on the first nonconstant component.
        std::size_t j = 0;
        while (j < curve.components.size() && !curve.components[j].depends_on(curve.var)) ++j;
        auto iota_j = MoebiusTransform::from_ratfunc(curve.components[j], curve.var);
        if (!iota_j) {
            res.detail = "cannot infer phi: curve component " + std::to_string(j + 1) +
                         " is not of Moebius degree; supply phi explicitly";
            return res;
        }
        RatFunc w = iota_j->inverse().apply(f_iota[j]);
        auto inferred = MoebiusTransform::from_ratfunc(w, curve.var);
        if (!inferred) {
            res.detail = "cannot infer phi: f o iota is not Moebius on component " +
                         std::to_string(j + 1);
            return res;
        }
        candidate = *inferred;
        res.inferred = true;
    }

    RatFunc phi_z = candidate.apply_var(curve.var);
    for (std::size_t i = 0; i < curve.components.size(); ++i) {
        RatFunc lhs = f_iota[i];
        RatFunc rhs = curve.components[i].substitute({{curve.var, phi_z}});
        if (lhs != rhs) {
            res.detail = "f o iota != iota o phi on component " + std::to_string(i + 1);
            return res;
        }
    }
    res.ok = true;
    res.phi = candidate;
    return res;
}

DifferenceSystem variational_system(const RationalMap& f, const AdaptedCurve& curve,
                                    const MoebiusTransform& phi) {
    validate(f);
    validate(curve);
    auto bind = curve_bindings(f, curve);
    RfMatrix df = jacobian(f);
    RfMatrix a(df.rows, df.cols);
    for (long i = 0; i < df.rows; ++i)
        for (long j = 0; j < df.cols; ++j) {
            try {
                a.at(i, j) = df.at(i, j).substitute(bind);
            } catch (const MathError&) {
                throw MathError("Jacobian entry (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") has a polar locus containing the curve");
            }
        }
    if (det(a).is_zero())
        throw MathError("variational matrix is singular along the curve");

    DifferenceSystem s{phi, a, false, curve.var};
    if (f.variables.size() % 2 == 0) {
        SymplecticStructure sym{static_cast<long>(f.variables.size()) / 2};
        s.symplectic = is_symplectic(f, sym);
    }
    return s;
}

bool verify_symplectic_system(const DifferenceSystem& s) {
    if (s.A.rows % 2 != 0) throw InputError("symplectic check requires even dimension");
    RfMatrix j = symplectic_form(s.A.rows / 2);
    return transpose(s.A) * j * s.A == j;
}

DifferenceSystem gauge_transform(const DifferenceSystem& s, const RfMatrix& P) {
    if (P.rows != s.A.rows || P.cols != s.A.cols)
        throw InputError("gauge matrix dimension mismatch");
    if (det(P).is_zero()) throw MathError("singular gauge matrix");
    RfMatrix p_phi = substitute(P, {{s.var, s.phi.apply_var(s.var)}});
    auto inv = inverse(p_phi);
    if (!inv) throw MathError("gauge matrix is singular after phi-shift");
    DifferenceSystem out{s.phi, *inv * s.A * P, false, s.var};
    if (out.A.rows % 2 == 0) out.symplectic = verify_symplectic_system(out);
    return out;
}

}  // namespace galint
