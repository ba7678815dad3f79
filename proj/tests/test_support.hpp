#ifndef CHROMALIE_TEST_SUPPORT_HPP
#define CHROMALIE_TEST_SUPPORT_HPP

#include "chromalie/algebra.hpp"

#include <random>

namespace chromalie::testing {

inline Rational R(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Element el(std::initializer_list<std::pair<int, long>> terms) {
    Element e;
    for (const auto& [i, c] : terms)
        if (c != 0) e.coeffs.emplace(i, Rational(c));
    return e;
}

inline GroupElement ge(std::vector<long long> coords) { return GroupElement{std::move(coords)}; }

// Platform-stable draw (uniform_int_distribution is implementation-defined).
inline long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// A random 3-dimensional evenly-graded algebra over Z2 x Z2 with one of the
// eight +/-1 bi-characters and a random even twist. Products respect the
// grading by construction; nothing else is promised, which is the point.
inline GradedAlgebra random_algebra(std::mt19937_64& rng, bool sparse = false) {
    GradedAlgebra A;
    A.spec = GroupSpec{0, {2, 2}};
    const Rational d0 = draw(rng, 0, 1) ? R(1) : R(-1);
    const Rational d1 = draw(rng, 0, 1) ? R(1) : R(-1);
    const Rational off = draw(rng, 0, 1) ? R(1) : R(-1);
    A.epsilon = BiCharacter{A.spec, {{d0, off}, {off, d1}}};

    const std::vector<GroupElement> degrees = {ge({0, 0}), ge({0, 1}), ge({1, 0}), ge({1, 1})};
    for (int i = 0; i < 3; ++i)
        A.basis.entries.push_back(
            {"x" + std::to_string(i), degrees[static_cast<std::size_t>(draw(rng, 0, 3))]});

    const std::vector<Rational> coeffs = {R(1), R(-1), R(2), R(-2), R(1, 2), R(3)};
    const long skip_odds = sparse ? 6 : 2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (draw(rng, 0, skip_odds) != 0) continue;
            const GroupElement target = group_add(A.spec, A.degree(i), A.degree(j));
            Element value;
            for (int k = 0; k < 3; ++k) {
                if (!(A.degree(k) == target)) continue;
                if (draw(rng, 0, 1) == 0) continue;
                value.coeffs.emplace(k, coeffs[static_cast<std::size_t>(draw(rng, 0, 5))]);
            }
            A.mult.set(i, j, std::move(value));
        }

    EvenMap zeta;
    for (int i = 0; i < 3; ++i) {
        Element img;
        for (int k = 0; k < 3; ++k) {
            if (!(A.degree(k) == A.degree(i))) continue;
            const long c = draw(rng, -2, 2);
            if (c != 0) img.coeffs.emplace(k, Rational(c));
        }
        zeta.set_column(i, std::move(img));
    }
    A.twist = std::move(zeta);
    return A;
}

} // namespace chromalie::testing

#endif
