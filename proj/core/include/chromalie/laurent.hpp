#ifndef CHROMALIE_LAURENT_HPP
#define CHROMALIE_LAURENT_HPP

#include "chromalie/algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace chromalie {

/// Exact Laurent polynomial over the rationals; multiplication is
/// exponent-wise convolution.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly term(long exponent, Rational coeff);
    static LaurentPoly constant(Rational c) { return term(0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Rational>& terms() const { return terms_; }
    long min_exponent() const; // throws on zero

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    bool operator==(const LaurentPoly&) const = default;

    /// "t^3 + 6*t^2 + 12*t + 8", highest exponent first.
    std::string to_string() const;

private:
    std::map<long, Rational> terms_;
};

/// f(lambda + t), expanded exactly by the binomial theorem. Only defined
/// for non-negative exponents (a genuine Laurent polynomial would leave
/// the ring); throws Error otherwise.
LaurentPoly substitute_shift(const LaurentPoly& f, const Rational& lambda);

/// Finite sum of basis-vector (x) Laurent-polynomial tensors; homogeneous
/// iff all indices share one degree.
struct ExtendedElement {
    std::map<int, LaurentPoly> parts;

    bool is_zero() const { return parts.empty(); }
    bool operator==(const ExtendedElement&) const = default;
};

ExtendedElement extended_term(int i, LaurentPoly f);
ExtendedElement add(const ExtendedElement& a, const ExtendedElement& b);
ExtendedElement scale(const Rational& c, const ExtendedElement& a);
ExtendedElement negate(ExtendedElement a);

/// The Laurent extension of a graded algebra: bracket
/// [x (x) f, y (x) g] = [x,y] (x) fg and twist zeta (x) id. Axiom checks
/// run on caller-supplied finite samples, not on a basis.
class LaurentContext {
public:
    explicit LaurentContext(GradedAlgebra base);

    const GradedAlgebra& base() const { return base_; }

    ExtendedElement bracket(const ExtendedElement& x, const ExtendedElement& y) const;
    ExtendedElement twist(const ExtendedElement& x) const;
    std::optional<GroupElement> degree(const ExtendedElement& x) const;
    bool is_homogeneous(const ExtendedElement& x) const;
    std::string to_string(const ExtendedElement& x) const;

    /// f(t) -> f(lambda + t) on each tensor factor.
    ExtendedElement substitute(const Rational& lambda, const ExtendedElement& x) const;

private:
    GradedAlgebra base_;
    EvenMap zeta_;
};

LaurentContext laurent_extend(const GradedAlgebra& L);

inline constexpr std::uint64_t kLaurentSampleSeed = 0x5EED;
inline constexpr int kLaurentSampleCount = 64;
inline constexpr int kLaurentDegreeBound = 4;

struct SampleCheckResult {
    bool pass = true;
    std::size_t samples = 0;
    std::string first_failure;
};

/// eps-skew of the extended bracket on sampled homogeneous pairs.
SampleCheckResult laurent_check_skew(const LaurentContext& ctx,
                                     int samples = kLaurentSampleCount,
                                     std::uint64_t seed = kLaurentSampleSeed,
                                     int degree_bound = kLaurentDegreeBound);

/// Hom eps-Jacobi of the extended bracket on sampled homogeneous triples.
SampleCheckResult laurent_check_hom_jacobi(const LaurentContext& ctx,
                                           int samples = kLaurentSampleCount,
                                           std::uint64_t seed = kLaurentSampleSeed,
                                           int degree_bound = kLaurentDegreeBound);

/// Bracket preservation of the shift substitution on sampled homogeneous
/// pairs with non-negative exponents.
SampleCheckResult laurent_check_substitution_endomorphism(const LaurentContext& ctx,
                                                          const Rational& lambda,
                                                          int samples = kLaurentSampleCount,
                                                          std::uint64_t seed = kLaurentSampleSeed,
                                                          int degree_bound = kLaurentDegreeBound);

} // namespace chromalie

#endif
