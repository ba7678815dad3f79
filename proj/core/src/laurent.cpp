#include "chromalie/laurent.hpp"

#include "chromalie/errors.hpp"

#include <random>
#include <sstream>

namespace chromalie {

LaurentPoly LaurentPoly::term(long exponent, Rational coeff) {
    LaurentPoly p;
    if (!chromalie::is_zero(coeff)) p.terms_.emplace(exponent, std::move(coeff));
    return p;
}

long LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw Error("zero Laurent polynomial has no exponents");
    return terms_.begin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (chromalie::is_zero(it->second)) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            Rational c = c1 * c2;
            auto [it, inserted] = out.terms_.try_emplace(e1 + e2, c);
            if (!inserted) {
                it->second += c;
                if (chromalie::is_zero(it->second)) out.terms_.erase(it);
            }
        }
    *this = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (chromalie::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational mag = it->second;
        const bool neg = sgn(mag) < 0;
        if (neg) mag = -mag;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const long e = it->first;
        if (e == 0) {
            os << chromalie::to_string(mag);
        } else {
            if (mag != 1) os << chromalie::to_string(mag) << '*';
            os << 't';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

LaurentPoly substitute_shift(const LaurentPoly& f, const Rational& lambda) {
    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (e < 0)
            throw Error("substitution t -> lambda+t needs non-negative exponents, got t^" +
                        std::to_string(e));
        // c (lambda+t)^e = c sum_k C(e,k) lambda^(e-k) t^k
        for (long k = 0; k <= e; ++k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e),
                         static_cast<unsigned long>(k));
            out += LaurentPoly::term(k, c * Rational(binom) * pow_rational(lambda, e - k));
        }
    }
    return out;
}

ExtendedElement extended_term(int i, LaurentPoly f) {
    ExtendedElement x;
    if (!f.is_zero()) x.parts.emplace(i, std::move(f));
    return x;
}

ExtendedElement add(const ExtendedElement& a, const ExtendedElement& b) {
    ExtendedElement r = a;
    for (const auto& [i, f] : b.parts) {
        auto [it, inserted] = r.parts.try_emplace(i, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero()) r.parts.erase(it);
        }
    }
    return r;
}

ExtendedElement scale(const Rational& c, const ExtendedElement& a) {
    if (is_zero(c)) return {};
    ExtendedElement r = a;
    for (auto& [i, f] : r.parts) f *= c;
    return r;
}

ExtendedElement negate(ExtendedElement a) { return scale(Rational(-1), a); }

LaurentContext::LaurentContext(GradedAlgebra base)
    : base_(std::move(base)), zeta_(base_.effective_twist()) {}

ExtendedElement LaurentContext::bracket(const ExtendedElement& x, const ExtendedElement& y) const {
    ExtendedElement out;
    for (const auto& [i, f] : x.parts)
        for (const auto& [j, g] : y.parts) {
            const Element& p = mult_basis(base_, i, j);
            if (p.is_zero()) continue;
            LaurentPoly fg = f;
            fg *= g;
            for (const auto& [k, c] : p.coeffs) {
                LaurentPoly piece = fg;
                piece *= c;
                out = add(out, extended_term(k, std::move(piece)));
            }
        }
    return out;
}

ExtendedElement LaurentContext::twist(const ExtendedElement& x) const {
    ExtendedElement out;
    for (const auto& [i, f] : x.parts) {
        const Element& img = zeta_.column(i);
        for (const auto& [k, c] : img.coeffs) {
            LaurentPoly piece = f;
            piece *= c;
            out = add(out, extended_term(k, std::move(piece)));
        }
    }
    return out;
}

std::optional<GroupElement> LaurentContext::degree(const ExtendedElement& x) const {
    std::optional<GroupElement> deg;
    for (const auto& [i, f] : x.parts) {
        const GroupElement& d = base_.degree(i);
        if (!deg)
            deg = d;
        else if (!(*deg == d))
            return std::nullopt;
    }
    return deg;
}

bool LaurentContext::is_homogeneous(const ExtendedElement& x) const {
    return x.is_zero() || degree(x).has_value();
}

std::string LaurentContext::to_string(const ExtendedElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, f] : x.parts) {
        if (!first) os << " + ";
        first = false;
        os << base_.basis.name(i) << "*(" << f.to_string() << ')';
    }
    return os.str();
}

ExtendedElement LaurentContext::substitute(const Rational& lambda, const ExtendedElement& x) const {
    ExtendedElement out;
    for (const auto& [i, f] : x.parts) out = add(out, extended_term(i, substitute_shift(f, lambda)));
    return out;
}

LaurentContext laurent_extend(const GradedAlgebra& L) { return LaurentContext(L); }

namespace {

// mt19937_64 plus modulo keeps the draws identical across platforms;
// std::uniform_int_distribution would not.
long next_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

LaurentPoly random_poly(std::mt19937_64& rng, long exp_lo, long exp_hi) {
    LaurentPoly f;
    const long nterms = next_in(rng, 1, 3);
    for (long t = 0; t < nterms; ++t) {
        const long e = next_in(rng, exp_lo, exp_hi);
        long c = next_in(rng, 1, 3);
        if (next_in(rng, 0, 1)) c = -c;
        f += LaurentPoly::term(e, Rational(c));
    }
    return f;
}

ExtendedElement random_homogeneous(const LaurentContext& ctx, std::mt19937_64& rng, long exp_lo,
                                   long exp_hi) {
    const int i = static_cast<int>(next_in(rng, 0, ctx.base().dim() - 1));
    return extended_term(i, random_poly(rng, exp_lo, exp_hi));
}

} // namespace

SampleCheckResult laurent_check_skew(const LaurentContext& ctx, int samples, std::uint64_t seed,
                                     int degree_bound) {
    std::mt19937_64 rng(seed);
    SampleCheckResult result;
    for (int s = 0; s < samples; ++s) {
        ExtendedElement u = random_homogeneous(ctx, rng, -degree_bound, degree_bound);
        ExtendedElement v = random_homogeneous(ctx, rng, -degree_bound, degree_bound);
        ++result.samples;
        auto du = ctx.degree(u);
        auto dv = ctx.degree(v);
        if (!du || !dv) continue;
        const Rational eps = ctx.base().epsilon.eval(*du, *dv);
        ExtendedElement residual = add(ctx.bracket(u, v), scale(eps, ctx.bracket(v, u)));
        if (!residual.is_zero()) {
            result.pass = false;
            result.first_failure = "skew residual " + ctx.to_string(residual) + " at sample " +
                                   std::to_string(s);
            return result;
        }
    }
    return result;
}

SampleCheckResult laurent_check_hom_jacobi(const LaurentContext& ctx, int samples,
                                           std::uint64_t seed, int degree_bound) {
    std::mt19937_64 rng(seed);
    SampleCheckResult result;
    for (int s = 0; s < samples; ++s) {
        ExtendedElement x = random_homogeneous(ctx, rng, -degree_bound, degree_bound);
        ExtendedElement y = random_homogeneous(ctx, rng, -degree_bound, degree_bound);
        ExtendedElement z = random_homogeneous(ctx, rng, -degree_bound, degree_bound);
        ++result.samples;
        auto dx = ctx.degree(x);
        auto dy = ctx.degree(y);
        auto dz = ctx.degree(z);
        if (!dx || !dy || !dz) continue;
        const BiCharacter& eps = ctx.base().epsilon;
        ExtendedElement residual =
            scale(eps.eval(*dz, *dx), ctx.bracket(ctx.twist(x), ctx.bracket(y, z)));
        residual = add(residual,
                       scale(eps.eval(*dx, *dy), ctx.bracket(ctx.twist(y), ctx.bracket(z, x))));
        residual = add(residual,
                       scale(eps.eval(*dy, *dz), ctx.bracket(ctx.twist(z), ctx.bracket(x, y))));
        if (!residual.is_zero()) {
            result.pass = false;
            result.first_failure = "hom-jacobi residual " + ctx.to_string(residual) +
                                   " at sample " + std::to_string(s);
            return result;
        }
    }
    return result;
}

SampleCheckResult laurent_check_substitution_endomorphism(const LaurentContext& ctx,
                                                          const Rational& lambda, int samples,
                                                          std::uint64_t seed, int degree_bound) {
    std::mt19937_64 rng(seed);
    SampleCheckResult result;
    for (int s = 0; s < samples; ++s) {
        ExtendedElement u = random_homogeneous(ctx, rng, 0, degree_bound);
        ExtendedElement v = random_homogeneous(ctx, rng, 0, degree_bound);
        ++result.samples;
        ExtendedElement lhs = ctx.substitute(lambda, ctx.bracket(u, v));
        ExtendedElement rhs = ctx.bracket(ctx.substitute(lambda, u), ctx.substitute(lambda, v));
        if (!(lhs == rhs)) {
            result.pass = false;
            result.first_failure = "substitution is not multiplicative at sample " +
                                   std::to_string(s);
            return result;
        }
    }
    return result;
}

} // namespace chromalie
