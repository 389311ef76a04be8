#include "galint/character.hpp"

#include <algorithm>

#include "galint/error.hpp"

namespace galint {

std::vector<std::pair<UniPoly, long>> squarefree_unipoly(const UniPoly& p) {
    std::vector<std::pair<UniPoly, long>> out;
    if (p.is_zero() || p.is_constant()) return out;
    UniPoly f = p.monic();
    UniPoly df = f.derivative();
    UniPoly g = gcd(f, df);
    UniPoly b = exact_quotient(f, g);
    UniPoly c = exact_quotient(df, g);
    UniPoly d = c - b.derivative();
    long i = 1;
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        if (a.is_zero()) throw MathError("squarefree decomposition failed");
        if (a.degree() > 0) out.emplace_back(a.monic(), i);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative();
        ++i;
        if (i > 512) throw MathError("squarefree decomposition did not terminate");
    }
    return out;
}

ZFactorization factor_unipoly(const UniPoly& p) {
    if (p.is_zero()) throw InputError("factorization of the zero polynomial");
    ZFactorization out;
    out.unit = p.lc();
    UniPoly m = p.monic();
    out.z_power = m.val0();
    m = m.shift_down(out.z_power);

    for (auto& [f, mult] : squarefree_unipoly(m)) {
        UniPoly g = f;
        while (g.degree() >= 1) {
            if (g.degree() == 1) {
                out.roots.emplace_back(-g.coeff(0), mult);
                g = UniPoly(RatFunc(Rational(1)));
                break;
            }
            if (g.degree() == 2) {
                RatFunc b = g.coeff(1), c = g.coeff(0);
                RatFunc disc = b * b - RatFunc(Rational(4)) * c;
                auto s = ratfunc_sqrt(disc);
                if (s) {
                    RatFunc half{Rational(1, 2)};
                    out.roots.emplace_back(half * (-b + *s), mult);
                    out.roots.emplace_back(half * (-b - *s), mult);
                } else {
                    out.blocks.emplace_back(g, mult);
                }
                break;
            }
            // Higher-degree factors are kept as blocks; only linear and
            // quadratic splitting is attempted over the ground field.
            out.blocks.emplace_back(g, mult);
            break;
        }
    }
    return out;
}

namespace {

struct TaggedFactor {
    UniPoly factor;  // monic
    long mult;
    int source;
};

// monic p(phi z)
UniPoly monic_shift1(const UniPoly& p, const PhiNormalForm& nf) {
    UniPoly s = nf.translation
                    ? p.compose_affine(RatFunc(Rational(1)), nf.step)
                    : p.compose_affine(nf.step, RatFunc());
    return s.monic();
}

struct Reduced {
    std::vector<CharacterPair::Row> rows;
    std::array<RatFunc, 2> constant;
    std::array<RatFunc, 2> witness;
    std::vector<std::string> notes;
};

constexpr long kOrbitScan = 64;

// Folds tagged factors onto shared orbit representatives. Merging the j-fold
// phi-shift S_j(rep) onto rep uses the exact identity
//   S_j(rep)^m = step^{-j*deg*m} * (g^m o phi)/(g^m) * rep^m,
// g = prod_{i<j} S_i(rep)  (no constant factor for translations),
// which keeps the stored constants and witnesses exact.
Reduced reduce_factors(std::vector<TaggedFactor> items, const PhiNormalForm& nf,
                       const AssumptionRegistry& reg, const std::string& var) {
    Reduced red;
    red.constant = {RatFunc(Rational(1)), RatFunc(Rational(1))};
    red.witness = {RatFunc(Rational(1)), RatFunc(Rational(1))};

    std::stable_sort(items.begin(), items.end(), [&](const TaggedFactor& a, const TaggedFactor& b) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        return a.factor.to_string(var) < b.factor.to_string(var);
    });

    for (const auto& item : items) {
        bool merged = false;
        for (auto& row : red.rows) {
            if (row.factor.degree() != item.factor.degree()) continue;
            if (row.factor == item.factor) {
                row.mult[static_cast<std::size_t>(item.source)] += item.mult;
                merged = true;
                break;
            }
            // item == S_j(rep) for some j in [-kOrbitScan, kOrbitScan]?
            long found = 0;
            UniPoly g_fwd{RatFunc(Rational(1))};
            UniPoly cur = row.factor;
            for (long j = 1; j <= kOrbitScan && found == 0; ++j) {
                g_fwd *= cur;  // prod_{i<j} S_i(rep)
                cur = monic_shift1(cur, nf);
                if (cur == item.factor) found = j;
            }
            UniPoly g_use = g_fwd;
            if (found == 0) {
                // rep == S_j(item): walk the item forward instead.
                UniPoly g_bwd{RatFunc(Rational(1))};
                UniPoly cur2 = item.factor;
                for (long j = 1; j <= kOrbitScan && found == 0; ++j) {
                    g_bwd *= cur2;
                    cur2 = monic_shift1(cur2, nf);
                    if (cur2 == row.factor) found = -j;
                }
                g_use = g_bwd;
            }
            if (found == 0) continue;

            long m = item.mult;
            long d = item.factor.degree();
            std::size_t src = static_cast<std::size_t>(item.source);
            RatFunc g_rf = g_use.to_ratfunc(var);
            if (found > 0) {
                // item = step^{-j d} (g o phi)/g * rep  with g = prod S_i(rep)
                if (!nf.translation)
                    red.constant[src] *= nf.step.pow(-found * d * m);
                red.witness[src] *= g_rf.pow(m);
            } else {
                // rep = step^{-j d} (g o phi)/g * item, inverted
                if (!nf.translation)
                    red.constant[src] *= nf.step.pow(-found * d * m);
                red.witness[src] *= g_rf.pow(-m);
            }
            row.mult[src] += m;
            merged = true;
            break;
        }
        if (merged) continue;

        // Not in any existing orbit symbolically; if a parametric relation
        // could still identify the orbits, record the assumed genericity.
        for (const auto& row : red.rows) {
            if (row.factor.degree() != item.factor.degree()) continue;
            if (item.factor.degree() == 1 && !nf.translation) {
                RatFunc r1 = -row.factor.coeff(0), r2 = -item.factor.coeff(0);
                if (r1.is_zero() || r2.is_zero()) continue;
                Decision dec = reg.in_power_lattice(r2 / r1, nf.step);
                if (dec.unknown())
                    red.notes.push_back("assumed (" + (r2 / r1).to_string() + ") not in (" +
                                        nf.step.to_string() + ")^Z [undeclared]");
            } else if (item.factor.degree() == 1 && nf.translation) {
                RatFunc diff = (-item.factor.coeff(0)) - (-row.factor.coeff(0));
                RatFunc ratio = diff / nf.step;
                if (!ratio.is_constant())
                    red.notes.push_back("assumed (" + diff.to_string() + ") not an integer multiple of (" +
                                        nf.step.to_string() + ") [undeclared]");
                // rational non-integer ratios were decided exactly by the scan
            } else {
                bool parametric = false;
                for (const auto& c : item.factor.coeffs())
                    if (!c.is_constant()) parametric = true;
                for (const auto& c : row.factor.coeffs())
                    if (!c.is_constant()) parametric = true;
                if (parametric)
                    red.notes.push_back("assumed factors " + item.factor.to_string(var) +
                                        " and " + row.factor.to_string(var) +
                                        " lie in distinct phi-orbits [undeclared]");
            }
        }
        CharacterPair::Row row;
        row.factor = item.factor;
        row.mult[static_cast<std::size_t>(item.source)] = item.mult;
        red.rows.push_back(std::move(row));
    }

    // Drop rows whose multiplicities cancelled entirely.
    std::erase_if(red.rows, [](const CharacterPair::Row& r) {
        return r.mult[0] == 0 && r.mult[1] == 0;
    });
    std::stable_sort(red.rows.begin(), red.rows.end(),
                     [&](const CharacterPair::Row& a, const CharacterPair::Row& b) {
                         if (a.factor.degree() != b.factor.degree())
                             return a.factor.degree() < b.factor.degree();
                         return a.factor.to_string(var) < b.factor.to_string(var);
                     });
    return red;
}

struct SourceData {
    RatFunc unit;
    long z_exp = 0;
    std::vector<TaggedFactor> items;
};

SourceData split_source(const RatFunc& r, const PhiNormalForm& nf, const std::string& var,
                        int source) {
    if (r.is_zero()) throw InputError("character of the zero function");
    auto [num, den] = unipair_from_ratfunc(r, var);
    ZFactorization fnum = factor_unipoly(num);
    ZFactorization fden = factor_unipoly(den);
    SourceData out;
    out.unit = fnum.unit / fden.unit;

    auto add = [&](const ZFactorization& f, long sign) {
        if (nf.translation) {
            if (f.z_power != 0)
                out.items.push_back({UniPoly::variable(), sign * f.z_power, source});
        }
        for (const auto& [rho, m] : f.roots) {
            UniPoly lin(std::vector<RatFunc>{-rho, RatFunc(Rational(1))});
            out.items.push_back({lin, sign * m, source});
        }
        for (const auto& [b, m] : f.blocks) out.items.push_back({b, sign * m, source});
    };
    if (!nf.translation) out.z_exp = fnum.z_power - fden.z_power;
    add(fnum, +1);
    add(fden, -1);
    return out;
}

// Exact check of the stored decomposition; guards the reduction algebra.
void verify_witness(const RatFunc& r, bool translation, const RatFunc& step, long z_exp,
                    const RatFunc& constant, const RatFunc& witness,
                    const std::vector<CharacterPair::Row>& rows, int source,
                    const MoebiusTransform& phi, const std::string& var) {
    RatFunc z = RatFunc::variable(var);
    RatFunc acc = constant;
    if (!translation && z_exp != 0) acc *= z.pow(z_exp);
    if (!witness.is_zero() && !(witness == RatFunc(Rational(1)))) {
        RatFunc gphi = witness.substitute({{var, phi.apply(z)}});
        acc *= gphi / witness;
    }
    for (const auto& row : rows) {
        long m = row.mult[static_cast<std::size_t>(source)];
        if (m != 0) acc *= row.factor.to_ratfunc(var).pow(m);
    }
    if (!(acc == r)) throw Error("internal: character witness identity failed");
}

}  // namespace

CharacterPair character_pair(const RatFunc& ra, const RatFunc& rd,
                             const MoebiusTransform& phi, const AssumptionRegistry& reg,
                             const std::string& var) {
    PhiNormalForm nf = phi_normal_form(phi);
    SourceData sa = split_source(ra, nf, var, 0);
    SourceData sd = split_source(rd, nf, var, 1);
    std::vector<TaggedFactor> items = sa.items;
    items.insert(items.end(), sd.items.begin(), sd.items.end());
    Reduced red = reduce_factors(std::move(items), nf, reg, var);

    CharacterPair out;
    out.translation = nf.translation;
    out.step = nf.step;
    out.var = var;
    out.rows = red.rows;
    out.z_exp = {sa.z_exp, sd.z_exp};
    out.constant = {sa.unit * red.constant[0], sd.unit * red.constant[1]};
    out.witness_g = red.witness;
    out.conditional_notes = red.notes;

    verify_witness(ra, nf.translation, nf.step, out.z_exp[0], out.constant[0],
                   out.witness_g[0], out.rows, 0, phi, var);
    verify_witness(rd, nf.translation, nf.step, out.z_exp[1], out.constant[1],
                   out.witness_g[1], out.rows, 1, phi, var);
    return out;
}

CharacterClass character_class(const RatFunc& r, const MoebiusTransform& phi,
                               const AssumptionRegistry& reg, const std::string& var) {
    PhiNormalForm nf = phi_normal_form(phi);
    SourceData s = split_source(r, nf, var, 0);
    Reduced red = reduce_factors(std::move(s.items), nf, reg, var);

    CharacterClass out;
    out.translation = nf.translation;
    out.step = nf.step;
    out.var = var;
    for (const auto& row : red.rows)
        if (row.mult[0] != 0) out.divisor.push_back({row.factor, row.mult[0]});
    out.z_exp = s.z_exp;
    out.constant = s.unit * red.constant[0];
    out.witness_g = red.witness[0];
    out.conditional_notes = red.notes;

    std::vector<CharacterPair::Row> rows;
    for (const auto& d : out.divisor) rows.push_back({d.factor, {d.mult, 0}});
    verify_witness(r, nf.translation, nf.step, out.z_exp, out.constant, out.witness_g, rows,
                   0, phi, var);
    return out;
}

Decision character_is_trivial(const CharacterClass& c, const AssumptionRegistry& reg) {
    Decision d;
    if (!c.divisor.empty()) {
        d.truth = Truth::No;
        d.note = "nontrivial orbit divisor";
        return d;
    }
    if (c.z_exp != 0) {
        d.truth = Truth::No;
        d.note = "nonzero exponent on z";
        return d;
    }
    return c.translation ? reg.is_one(c.constant) : reg.in_power_lattice(c.constant, c.step);
}

}  // namespace galint
