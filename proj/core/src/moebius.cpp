#include "galint/moebius.hpp"

#include "galint/error.hpp"
#include "galint/unipoly.hpp"

namespace galint {

MoebiusTransform::MoebiusTransform(RatFunc a, RatFunc b, RatFunc c, RatFunc d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if ((a_ * d_ - b_ * c_).is_zero())
        throw MathError("degenerate Moebius coefficients (ad - bc = 0)");
    normalize_projective();
}

void MoebiusTransform::normalize_projective() {
    const RatFunc* lead = nullptr;
    for (const RatFunc* p : {&a_, &b_, &c_, &d_})
        if (!p->is_zero()) {
            lead = p;
            break;
        }
    RatFunc inv = RatFunc(Rational(1)) / *lead;
    a_ *= inv;
    b_ *= inv;
    c_ *= inv;
    d_ *= inv;
}

MoebiusTransform MoebiusTransform::translation(const RatFunc& h) {
    return MoebiusTransform(RatFunc(Rational(1)), h, RatFunc(), RatFunc(Rational(1)));
}

MoebiusTransform MoebiusTransform::dilation(const RatFunc& q) {
    if (q.is_zero()) throw MathError("dilation factor must be nonzero");
    return MoebiusTransform(q, RatFunc(), RatFunc(), RatFunc(Rational(1)));
}

MoebiusTransform MoebiusTransform::identity() {
    return translation(RatFunc());
}

RatFunc MoebiusTransform::apply(const RatFunc& w) const {
    RatFunc den = c_ * w + d_;
    if (den.is_zero()) throw MathError("Moebius image is identically infinite");
    return (a_ * w + b_) / den;
}

RatFunc MoebiusTransform::apply_var(const std::string& z) const {
    return apply(RatFunc::variable(z));
}

MoebiusTransform MoebiusTransform::compose(const MoebiusTransform& inner) const {
    return MoebiusTransform(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                            c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

MoebiusTransform MoebiusTransform::inverse() const {
    return MoebiusTransform(d_, -b_, -c_, a_);
}

MoebiusTransform MoebiusTransform::power(long k) const {
    if (k == 0) return identity();
    MoebiusTransform base = k > 0 ? *this : inverse();
    if (k < 0) k = -k;
    MoebiusTransform out = identity();
    while (k > 0) {
        if (k & 1) out = out.compose(base);
        k >>= 1;
        if (k) base = base.compose(base);
    }
    return out;
}

bool MoebiusTransform::is_identity() const {
    return b_.is_zero() && c_.is_zero() && a_ == d_;
}

std::optional<MoebiusTransform> MoebiusTransform::from_ratfunc(const RatFunc& g,
                                                               const std::string& z) {
    if (!g.depends_on(z)) return std::nullopt;
    auto [num, den] = unipair_from_ratfunc(g, z);
    if (num.degree() > 1 || den.degree() > 1) return std::nullopt;
    RatFunc a = num.coeff(1), b = num.coeff(0);
    RatFunc c = den.coeff(1), d = den.coeff(0);
    for (const RatFunc* p : {&a, &b, &c, &d})
        if (p->depends_on(z)) return std::nullopt;
    if ((a * d - b * c).is_zero()) return std::nullopt;
    return MoebiusTransform(a, b, c, d);
}

std::string MoebiusTransform::to_string(const std::string& z) const {
    return apply_var(z).to_string();
}

PhiNormalForm phi_normal_form(const MoebiusTransform& phi) {
    if (!phi.c().is_zero())
        throw InputError("phi is not in normalized class (translation or dilation)");
    PhiNormalForm out;
    RatFunc slope = phi.a() / phi.d();
    RatFunc offset = phi.b() / phi.d();
    if (slope == RatFunc(Rational(1))) {
        if (offset.is_zero()) throw InputError("phi is the identity");
        out.translation = true;
        out.step = offset;
        return out;
    }
    if (!offset.is_zero())
        throw InputError("phi is not in normalized class (translation or dilation)");
    out.step = slope;
    return out;
}

MoebiusClass classify_moebius(const MoebiusTransform& phi, long period_bound) {
    MoebiusClass out;

    // periodicity by matrix powers in PGL2
    MoebiusTransform acc = phi;
    for (long k = 1; k <= period_bound; ++k) {
        if (acc.is_identity()) {
            out.periodic = true;
            out.period = k;
            break;
        }
        acc = acc.compose(phi);
    }

    const RatFunc one{Rational(1)};
    if (phi.c().is_zero()) {
        out.fixes_infinity = true;
        RatFunc slope = phi.a() / phi.d();
        RatFunc offset = phi.b() / phi.d();
        if (slope == one) {
            out.kind = MoebiusKind::Translation;
            out.parameter = offset;
            out.normalizer = MoebiusTransform::identity();
        } else {
            out.kind = MoebiusKind::Dilation;
            out.parameter = slope;
            RatFunc zstar = offset / (one - slope);
            out.fixed_points.push_back(zstar);
            out.normalizer = MoebiusTransform::translation(-zstar);
        }
        return out;
    }

    // two or one finite fixed points: roots of c z^2 + (d - a) z - b
    RatFunc A = phi.c(), B = phi.d() - phi.a(), C = -phi.b();
    RatFunc disc = B * B - RatFunc(Rational(4)) * A * C;
    if (disc.is_zero()) {
        RatFunc z0 = -B / (RatFunc(Rational(2)) * A);
        out.fixed_points.push_back(z0);
        // mu : z -> 1/(z - z0) sends the fixed point to infinity
        MoebiusTransform mu(RatFunc(), one, one, -z0);
        MoebiusTransform conj = mu.compose(phi).compose(mu.inverse());
        out.kind = MoebiusKind::Translation;
        out.parameter = conj.b() / conj.d();
        out.normalizer = mu;
        return out;
    }
    auto s = ratfunc_sqrt(disc);
    if (!s) {
        out.kind = MoebiusKind::General;
        out.note = "fixed points are not rational over the ground field";
        return out;
    }
    RatFunc two_a = RatFunc(Rational(2)) * A;
    RatFunc z1 = (-B + *s) / two_a;
    RatFunc z2 = (-B - *s) / two_a;
    out.fixed_points = {z1, z2};
    MoebiusTransform mu(one, -z1, one, -z2);
    MoebiusTransform conj = mu.compose(phi).compose(mu.inverse());
    if (!conj.c().is_zero() || !conj.b().is_zero())
        throw MathError("normalization of Moebius transform failed");
    out.kind = MoebiusKind::Dilation;
    out.parameter = conj.a() / conj.d();
    out.normalizer = mu;
    return out;
}

}  // namespace galint
