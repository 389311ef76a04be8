#include "galint/registry.hpp"

#include <cmath>

#include "galint/error.hpp"

namespace galint {

std::string Fact::describe() const {
    switch (kind) {
        case Kind::Nonzero:
            return "nonzero(" + e1.to_string() + ")";
        case Kind::NotRootOfUnity:
            return "not_root_of_unity(" + e1.to_string() + ")";
        case Kind::NotInPowerLattice:
            return e1.to_string() + " not in (" + base.to_string() + ")^Z";
        case Kind::IndependentMultiplicative:
            return e1.to_string() + ", " + e2.to_string() +
                   " multiplicatively independent over (" + base.to_string() + ")^Z";
    }
    return "?";
}

std::optional<long> as_power(const RatFunc& c, const RatFunc& base, long bound) {
    const RatFunc one{Rational(1)};
    if (base.is_zero()) return std::nullopt;
    if (c == one) return 0;
    if (base == one) return std::nullopt;   // c != 1 here
    if (base == RatFunc(Rational(-1)))
        return c == RatFunc(Rational(-1)) ? std::optional<long>(1) : std::nullopt;
    RatFunc up = one, down = one;
    RatFunc binv = one / base;
    for (long j = 1; j <= bound; ++j) {
        up *= base;
        if (up == c) return j;
        down *= binv;
        if (down == c) return -j;
    }
    return std::nullopt;
}

namespace {

// Exact decision for rational numbers: c = base^j for some integer j?
Decision rational_power_lattice(const Rational& c, const Rational& base) {
    Decision d;
    if (c == 0 || base == 0) {
        d.truth = Truth::No;
        return d;
    }
    if (c == 1) {
        d.truth = Truth::Yes;
        d.exponent = 0;
        return d;
    }
    if (base == 1) {
        d.truth = Truth::No;
        return d;
    }
    if (base == -1) {
        d.truth = (c == -1) ? Truth::Yes : Truth::No;
        if (d.yes()) d.exponent = 1;
        return d;
    }
    // |base| != 1: |base^j| is strictly monotone in j, so the scan below is
    // exhaustive once the magnitude passes |c|.
    auto mag_lt = [](const Rational& x, const Rational& y) {
        return abs(x) < abs(y);
    };
    bool growing = mag_lt(Rational(1), base) || mag_lt(Rational(1), -base);
    Rational p(1);
    for (long j = 1; j <= 8192; ++j) {
        p *= base;
        if (p == c) {
            d.truth = Truth::Yes;
            d.exponent = j;
            return d;
        }
        if (growing ? mag_lt(c, p) : mag_lt(p, c)) break;
    }
    Rational binv = 1 / base;
    p = 1;
    for (long j = 1; j <= 8192; ++j) {
        p *= binv;
        if (p == c) {
            d.truth = Truth::Yes;
            d.exponent = -j;
            return d;
        }
        if (growing ? mag_lt(p, c) : mag_lt(c, p)) break;
    }
    d.truth = Truth::No;
    return d;
}

bool structurally_matches(const RatFunc& x, const RatFunc& e, long n, const RatFunc& base,
                          long m) {
    try {
        return x == e.pow(n) * base.pow(m);
    } catch (const MathError&) {
        return false;
    }
}

}  // namespace

AssumptionRegistry::AssumptionRegistry(std::vector<Fact> facts) : facts_(std::move(facts)) {
    // Consistency: reject facts refutable by symbolic identities.
    for (const auto& f : facts_) {
        switch (f.kind) {
            case Fact::Kind::Nonzero:
                if (f.e1.is_zero())
                    throw InputError("inconsistent assumption: " + f.describe());
                break;
            case Fact::Kind::NotRootOfUnity: {
                if (f.e1.is_constant()) {
                    Rational v = f.e1.constant_value();
                    if (v == 1 || v == -1)
                        throw InputError("inconsistent assumption: " + f.describe());
                }
                RatFunc p{Rational(1)};
                for (long k = 1; k <= 24; ++k) {
                    p *= f.e1;
                    if (p == RatFunc(Rational(1)))
                        throw InputError("inconsistent assumption: " + f.describe());
                }
                break;
            }
            case Fact::Kind::NotInPowerLattice:
                for (long n = 1; n <= 6; ++n)
                    for (long m = -12; m <= 12; ++m) {
                        bool hit = false;
                        try {
                            hit = f.e1.pow(n) == f.base.pow(m);
                        } catch (const MathError&) {
                        }
                        if (hit) throw InputError("inconsistent assumption: " + f.describe());
                    }
                break;
            case Fact::Kind::IndependentMultiplicative:
                for (long a = -4; a <= 4; ++a)
                    for (long b = -4; b <= 4; ++b) {
                        if (a == 0 && b == 0) continue;
                        for (long m = -8; m <= 8; ++m) {
                            bool hit = false;
                            try {
                                hit = f.e1.pow(a) * f.e2.pow(b) == f.base.pow(m);
                            } catch (const MathError&) {
                            }
                            if (hit)
                                throw InputError("inconsistent assumption: " + f.describe());
                        }
                    }
                break;
        }
    }
}

Decision AssumptionRegistry::in_power_lattice(const RatFunc& c, const RatFunc& base) const {
    Decision d;
    if (c.is_zero()) {
        d.truth = Truth::No;
        d.note = "zero is in no power lattice";
        return d;
    }
    // Symbolic witness.
    if (auto j = as_power(c, base)) {
        d.truth = Truth::Yes;
        d.exponent = *j;
        return d;
    }
    // Exact decision for rational numbers.
    if (c.is_constant() && base.is_constant())
        return rational_power_lattice(c.constant_value(), base.constant_value());

    // Fact-driven exclusion: write c = e^n * base^m against a declared fact.
    for (const auto& f : facts_) {
        if (f.kind == Fact::Kind::NotInPowerLattice && f.base == base) {
            for (long n = -8; n <= 8; ++n) {
                if (n == 0) continue;
                for (long m = -8; m <= 8; ++m) {
                    if (structurally_matches(c, f.e1, n, base, m)) {
                        d.truth = Truth::No;
                        d.used_facts.push_back(f.describe());
                        d.note = "c = (" + f.e1.to_string() + ")^" + std::to_string(n) +
                                 " * base^" + std::to_string(m);
                        return d;
                    }
                }
            }
        }
        if (f.kind == Fact::Kind::IndependentMultiplicative && f.base == base) {
            for (long a = -6; a <= 6; ++a)
                for (long b = -6; b <= 6; ++b) {
                    if (a == 0 && b == 0) continue;
                    for (long m = -8; m <= 8; ++m) {
                        try {
                            if (c == f.e1.pow(a) * f.e2.pow(b) * base.pow(m)) {
                                d.truth = Truth::No;
                                d.used_facts.push_back(f.describe());
                                return d;
                            }
                        } catch (const MathError&) {
                        }
                    }
                }
        }
    }
    d.truth = Truth::Unknown;
    d.note = "membership of " + c.to_string() + " in (" + base.to_string() +
             ")^Z is not decided by the registry";
    return d;
}

Decision AssumptionRegistry::is_one(const RatFunc& c) const {
    Decision d;
    if (c == RatFunc(Rational(1))) {
        d.truth = Truth::Yes;
        return d;
    }
    if (c.is_constant()) {
        d.truth = Truth::No;
        return d;
    }
    RatFunc delta = c - RatFunc(Rational(1));
    for (const auto& f : facts_) {
        if (f.kind == Fact::Kind::Nonzero && (f.e1 == delta || f.e1 == -delta)) {
            d.truth = Truth::No;
            d.used_facts.push_back(f.describe());
            return d;
        }
    }
    d.truth = Truth::Unknown;
    d.note = "equality of " + c.to_string() + " with 1 is not decided by the registry";
    return d;
}

Decision AssumptionRegistry::is_nonzero(const RatFunc& e) const {
    Decision d;
    if (e.is_zero()) {
        d.truth = Truth::No;
        return d;
    }
    if (e.is_constant()) {
        d.truth = Truth::Yes;
        return d;
    }
    for (const auto& f : facts_) {
        if (f.kind == Fact::Kind::Nonzero && (f.e1 == e || f.e1 == -e)) {
            d.truth = Truth::Yes;
            d.used_facts.push_back(f.describe());
            return d;
        }
    }
    d.truth = Truth::Unknown;
    return d;
}

Decision AssumptionRegistry::is_root_of_unity(const RatFunc& e) const {
    Decision d;
    if (e.is_constant()) {
        Rational v = e.constant_value();
        d.truth = (v == 1 || v == -1) ? Truth::Yes : Truth::No;
        if (d.yes()) d.exponent = (v == 1) ? 1 : 2;
        return d;
    }
    RatFunc p{Rational(1)};
    for (long k = 1; k <= 24; ++k) {
        p *= e;
        if (p == RatFunc(Rational(1))) {
            d.truth = Truth::Yes;
            d.exponent = k;
            return d;
        }
    }
    for (const auto& f : facts_) {
        if (f.kind == Fact::Kind::NotRootOfUnity && f.e1 == e) {
            d.truth = Truth::No;
            d.used_facts.push_back(f.describe());
            return d;
        }
    }
    d.truth = Truth::Unknown;
    d.note = "root-of-unity status of " + e.to_string() + " is not decided by the registry";
    return d;
}

}  // namespace galint
