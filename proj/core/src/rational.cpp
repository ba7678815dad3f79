#include "chromalie/rational.hpp"

#include "chromalie/errors.hpp"

#include <cctype>

namespace chromalie {

namespace {

// Hand-rolled match of ^-?[0-9]+(/[1-9][0-9]*)?$ (std::regex is overkill
// on this hot parse path).
bool matches_rational_grammar(const std::string& s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    if (i < n && s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i == n) return true;
    if (s[i] != '/') return false;
    ++i;
    if (i >= n || s[i] < '1' || s[i] > '9') return false;
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i == n;
}

} // namespace

Rational parse_rational(const std::string& text) {
    if (!matches_rational_grammar(text))
        throw ParseError("invalid rational '" + text + "' (expected p or p/q with q >= 1)");
    Rational q(text, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational pow_rational(const Rational& q, long long e) {
    if (e == 0) return Rational(1);
    if (is_zero(q)) {
        if (e < 0) throw Error("zero has no negative powers");
        return Rational(0);
    }
    Rational base = q;
    if (e < 0) {
        base = 1 / base;
        e = -e;
    }
    // +/-1 powers reduce to a parity lookup.
    if (base == 1) return base;
    if (base == -1) return (e % 2 == 0) ? Rational(1) : Rational(-1);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace chromalie
