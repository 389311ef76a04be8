#include "galint/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "galint/error.hpp"

namespace galint {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty number", 0);
    std::size_t i = 0;
    auto scan_int = [&](const char* what) {
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++digits;
        }
        if (digits == 0) throw ParseError(std::string("expected ") + what, start);
    };
    scan_int("integer");
    if (i < s.size() && s[i] == '/') {
        ++i;
        scan_int("denominator");
    }
    if (i != s.size()) throw ParseError("trailing characters in number", i);

    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("malformed rational", 0);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw ParseError("zero denominator in rational literal", 0);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw MathError("0 raised to a negative power");
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(r.get_mpq_t()), mag);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(r.get_mpq_t()), mag);
    if (e < 0) mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    out.canonicalize();
    return out;
}

bool rational_is_integer(const Rational& r) {
    return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0;
}

long rational_to_long(const Rational& r) {
    if (!rational_is_integer(r)) throw MathError("rational is not an integer");
    const mpz_class num = r.get_num();
    if (!num.fits_slong_p()) throw MathError("integer does not fit in long");
    return num.get_si();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    const mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) return Rational(0);
    mpz_class gn, gl;
    mpz_gcd(gn.get_mpz_t(), mpq_numref(a.get_mpq_t()), mpq_numref(b.get_mpq_t()));
    mpz_lcm(gl.get_mpz_t(), mpq_denref(a.get_mpq_t()), mpq_denref(b.get_mpq_t()));
    Rational out(gn, gl);
    out.canonicalize();
    if (out < 0) out = -out;
    return out;
}

}  // namespace galint
