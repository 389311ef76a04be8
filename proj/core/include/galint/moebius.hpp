#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galint/ratfunc.hpp"

namespace galint {

// Moebius transformation z -> (a z + b)/(c z + d) with ad - bc != 0 and
// coefficients in the parameter field. Stored projectively normalized (the
// first nonzero coefficient among a, b, c, d is 1), so PGL2-equality is
// structural equality.
class MoebiusTransform {
public:
    MoebiusTransform(RatFunc a, RatFunc b, RatFunc c, RatFunc d);

    static MoebiusTransform translation(const RatFunc& h);  // z + h
    static MoebiusTransform dilation(const RatFunc& q);     // q z, q != 0
    static MoebiusTransform identity();

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    const RatFunc& c() const { return c_; }
    const RatFunc& d() const { return d_; }

    RatFunc apply(const RatFunc& w) const;
    RatFunc apply_var(const std::string& z) const;

    MoebiusTransform compose(const MoebiusTransform& inner) const;  // this after inner
    MoebiusTransform inverse() const;
    MoebiusTransform power(long k) const;

    bool is_identity() const;

    // Extracts the transform from a rational function of degree one in z.
    static std::optional<MoebiusTransform> from_ratfunc(const RatFunc& g,
                                                        const std::string& z);

    std::string to_string(const std::string& z = "z") const;

    friend bool operator==(const MoebiusTransform& x, const MoebiusTransform& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const MoebiusTransform& x, const MoebiusTransform& y) {
        return !(x == y);
    }

private:
    RatFunc a_, b_, c_, d_;
    void normalize_projective();
};

enum class MoebiusKind { Translation, Dilation, General };

struct MoebiusClass {
    MoebiusKind kind = MoebiusKind::General;
    RatFunc parameter;                    // h (translation) or multiplier q (dilation)
    std::vector<RatFunc> fixed_points;    // finite fixed points rational over the field
    bool fixes_infinity = false;
    bool periodic = false;
    long period = 0;                      // set when periodic within the bound
    std::optional<MoebiusTransform> normalizer;  // w = mu(z) conjugates to normal form
    std::string note;
};

// Classifies by the number of fixed points on the projective line; the
// normalizing change of variable is produced when the fixed points are
// rational over the ground field. Periodicity (phi^k = id, k <= bound) is
// flagged with its order.
MoebiusClass classify_moebius(const MoebiusTransform& phi, long period_bound = 12);

// phi already written as z + h or q z; throws InputError otherwise (and on
// the identity).
struct PhiNormalForm {
    bool translation = false;
    RatFunc step;  // h or q
};
PhiNormalForm phi_normal_form(const MoebiusTransform& phi);

}  // namespace galint
