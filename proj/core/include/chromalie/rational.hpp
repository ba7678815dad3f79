#ifndef CHROMALIE_RATIONAL_HPP
#define CHROMALIE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace chromalie {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator), which is what canonical equality and the
/// serialization grammar rely on.
using Rational = mpq_class;

/// Parses the grammar ^-?[0-9]+(/[1-9][0-9]*)?$ ("p" or "p/q").
/// Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

/// Lowest terms, positive denominator; "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// q^e for integer e (negative allowed; q must be nonzero then).
Rational pow_rational(const Rational& q, long long e);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace chromalie

#endif
