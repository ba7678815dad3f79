#include "chromalie/constructions.hpp"

#include "chromalie/corpus.hpp"
#include "chromalie/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace chromalie;
using chromalie::testing::R;
using chromalie::testing::el;
using chromalie::testing::ge;

TEST_CASE("commutator of the commutative twisted group algebra is zero") {
    const CommutatorResult result = commutator_algebra(build_corpus(CorpusId::group_hom_assoc));
    CHECK(result.precondition_ok);
    CHECK(result.algebra.mult.products.empty());
    CHECK(result.algebra.flavor == Flavor::hom_lie_color);
    CHECK(check_eps_skew(result.algebra).pass());
    CHECK(check_hom_eps_jacobi(result.algebra).pass());
}

TEST_CASE("commutator with eps(1,1) = -1 declared instead") {
    GradedAlgebra A = build_corpus(CorpusId::group_hom_assoc);
    A.epsilon = BiCharacter::checked(A.spec, {{R(-1)}});
    const CommutatorResult result = commutator_algebra(A);
    CHECK(result.precondition_ok);
    // [u1,u1] = u1 u1 + u1 u1 = 2 u0; everything else cancels.
    CHECK(result.algebra.mult.at(1, 1) == el({{0, 2}}));
    CHECK(result.algebra.mult.at(0, 1).is_zero());
    CHECK(result.algebra.mult.at(1, 0).is_zero());
    CHECK(result.algebra.mult.at(0, 0).is_zero());
    CHECK(check_eps_skew(result.algebra).pass());
    CHECK(check_hom_eps_jacobi(result.algebra).pass());
}

TEST_CASE("commutator output is eps-skew regardless of the input") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const GradedAlgebra A = chromalie::testing::random_algebra(rng);
        CHECK(check_eps_skew(commutator_algebra(A).algebra).pass());
    }
}

TEST_CASE("commutator of a non-hom-associative input carries a warning but still works") {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    const CommutatorResult result = commutator_algebra(H);
    CHECK_FALSE(result.precondition_ok);
    CHECK_FALSE(result.hom_assoc.pass());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(result.algebra.mult.at(i, j) == scale(R(2), mult_basis(H, i, j)));
    CHECK(check_eps_skew(result.algebra).pass());
    CHECK(check_hom_eps_jacobi(result.algebra).pass());
}

TEST_CASE("endo_twist_mult on the Z2 group algebra") {
    GradedAlgebra A;
    A.spec = GroupSpec{0, {2}};
    A.epsilon = trivial_bicharacter(A.spec);
    A.basis.entries = {{"u0", ge({0})}, {"u1", ge({1})}};
    A.mult.set(0, 0, element_unit(0));
    A.mult.set(0, 1, element_unit(1));
    A.mult.set(1, 0, element_unit(1));
    A.mult.set(1, 1, element_unit(0));

    EvenMap zeta;
    zeta.set_column(0, element_unit(0));
    zeta.set_column(1, el({{1, -1}}));
    const GradedAlgebra twisted = endo_twist_mult(A, zeta);
    CHECK(twisted.mult.at(1, 1) == element_unit(0));
    CHECK(twisted.mult.at(0, 1) == el({{1, -1}}));
    CHECK(twisted.mult.at(1, 0) == el({{1, -1}}));
    CHECK(twisted.flavor == Flavor::hom_color);
    CHECK(check_hom_associativity(twisted).pass());
    // zeta stays multiplicative for the twisted product.
    CHECK(is_endomorphism(twisted, zeta).ok);

    // Identity twist changes nothing.
    CHECK(endo_twist_mult(A, identity_map(A.basis)).mult == A.mult);

    // zeta(u1) = 2 u1 breaks zeta o mu = mu o zeta^(x)2 at (u1,u1).
    EvenMap bad;
    bad.set_column(0, element_unit(0));
    bad.set_column(1, el({{1, 2}}));
    CHECK_THROWS_WITH_AS(endo_twist_mult(A, bad),
                         "zeta o mu = mu o zeta^(x)2 fails at (u1,u1)", PreconditionError);

    // Non-associative input is rejected.
    GradedAlgebra nonassoc = build_corpus(CorpusId::sl2_color);
    CHECK_THROWS_AS(endo_twist_mult(nonassoc, identity_map(nonassoc.basis)), PreconditionError);
}

TEST_CASE("an equivariant algebra homomorphism survives the product twist") {
    GradedAlgebra A = build_corpus(CorpusId::group_hom_assoc);
    // f = zeta is an algebra endomorphism commuting with zeta.
    const EvenMap f = *A.twist;
    CHECK(check_morphism(A, A, f).pass());
}

TEST_CASE("endo_twist_bracket reproduces the twisted sl(2) table") {
    const GradedAlgebra L = build_corpus(CorpusId::sl2_color);
    EvenMap zeta;
    zeta.set_column(0, el({{0, -1}}));
    zeta.set_column(1, el({{1, -1}}));
    zeta.set_column(2, el({{2, 1}}));
    const GradedAlgebra twisted = endo_twist_bracket(L, zeta);
    CHECK(twisted.mult.at(0, 1) == el({{2, -1}}));
    CHECK(twisted.mult.at(1, 2) == el({{0, -1}}));
    CHECK(twisted.mult.at(2, 0) == el({{1, -1}}));
    CHECK(twisted.flavor == Flavor::hom_lie_color);
    CHECK(check_eps_skew(twisted).pass());
    CHECK(check_hom_eps_jacobi(twisted).pass());

    // Identity twist keeps the bracket.
    CHECK(endo_twist_bracket(L, identity_map(L.basis)).mult == L.mult);

    // diag(2,2,2) is not an endomorphism.
    EvenMap doubled;
    doubled.set_column(0, el({{0, 2}}));
    doubled.set_column(1, el({{1, 2}}));
    doubled.set_column(2, el({{2, 2}}));
    CHECK_THROWS_WITH_AS(endo_twist_bracket(L, doubled),
                         "map is not an algebra endomorphism at (a1,a2)", PreconditionError);

    // Inputs failing skew or Jacobi are rejected.
    CHECK_THROWS_AS(endo_twist_bracket(build_corpus(CorpusId::sl2_color_paper_eps),
                                       identity_map(L.basis)),
                    PreconditionError);
    GradedAlgebra lopsided = L;
    lopsided.mult.products.erase({1, 0});
    CHECK_THROWS_AS(endo_twist_bracket(lopsided, zeta), PreconditionError);
}

TEST_CASE("heisenberg twist") {
    const GradedAlgebra H = build_corpus(CorpusId::heisenberg_color);
    EvenMap zeta;
    zeta.set_column(0, el({{0, 2}}));
    zeta.set_column(1, el({{1, 3}}));
    zeta.set_column(2, el({{2, 6}}));
    const GradedAlgebra twisted = endo_twist_bracket(H, zeta);
    CHECK(twisted.mult.at(0, 1) == el({{2, 6}}));
    CHECK(twisted.mult.at(1, 0) == el({{2, 6}}));
    CHECK(twisted.mult.products.size() == 2);
}

TEST_CASE("twist theorem round-trips over every verified diagonal endomorphism") {
    const std::vector<Rational> candidates = {R(1), R(-1), R(2), R(-2), R(1, 2), R(-1, 2),
                                              R(4), R(1, 4)};
    for (CorpusId id : {CorpusId::sl2_color, CorpusId::heisenberg_color, CorpusId::witt_z2}) {
        const GradedAlgebra L = build_corpus(id);
        const auto endos = solve_diagonal_endomorphisms(L, candidates, true);
        CHECK(!endos.empty());
        for (const EvenMap& zeta : endos) {
            const GradedAlgebra twisted = endo_twist_bracket(L, zeta);
            CHECK(check_eps_skew(twisted).pass());
            CHECK(check_hom_eps_jacobi(twisted).pass());
        }
    }
}

TEST_CASE("equivariant color homomorphisms survive the bracket twist") {
    const GradedAlgebra L = build_corpus(CorpusId::sl2_color);
    EvenMap zeta;
    zeta.set_column(0, el({{0, -1}}));
    zeta.set_column(1, el({{1, -1}}));
    zeta.set_column(2, el({{2, 1}}));
    // f = zeta is a color homomorphism with f o zeta = zeta o f.
    CHECK(check_morphism(L, L, zeta).pass());
    const GradedAlgebra twisted = endo_twist_bracket(L, zeta);
    CHECK(check_morphism(twisted, twisted, zeta).pass());
}

TEST_CASE("sigma twist in multiplier mode reproduces the twisted table and eps*delta") {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    const SigmaForm sigma =
        SigmaForm::bimultiplicative(H.spec, {{R(1), R(-1)}, {R(1), R(1)}});
    const GradedAlgebra out = sigma_twist(H, sigma, SigmaMode::multiplier);
    CHECK(out.mult.at(0, 1) == el({{2, 1}}));  // <a1,a2> = a3
    CHECK(out.mult.at(1, 2) == el({{0, -1}})); // <a2,a3> = -a1
    CHECK(out.mult.at(2, 0) == el({{1, -1}})); // <a3,a1> = -a2
    CHECK(out.epsilon.matrix == std::vector<std::vector<Rational>>{{R(1), R(1)}, {R(1), R(1)}});
    CHECK(validate_bicharacter(out.epsilon.spec, out.epsilon.matrix).ok());
    CHECK(check_eps_skew(out).pass());
    CHECK(check_hom_eps_jacobi(out).pass());
    // eps-skew under the OLD eps genuinely fails, so the delta factor matters.
    GradedAlgebra wrong_eps = out;
    wrong_eps.epsilon = H.epsilon;
    CHECK_FALSE(check_eps_skew(wrong_eps).pass());
}

TEST_CASE("sigma twist by the trivial form changes nothing") {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    const SigmaForm one = SigmaForm::bimultiplicative(H.spec, {{R(1), R(1)}, {R(1), R(1)}});
    for (SigmaMode mode : {SigmaMode::symmetric, SigmaMode::multiplier}) {
        const GradedAlgebra out = sigma_twist(H, one, mode);
        CHECK(out.mult == H.mult);
        CHECK(out.epsilon == H.epsilon);
    }
}

TEST_CASE("sigma twist in symmetric mode keeps eps and rescales by the coboundary") {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    const SigmaForm tau = SigmaForm::coboundary(
        H.spec,
        {{ge({0, 0}), R(1)}, {ge({1, 0}), R(2)}, {ge({0, 1}), R(3)}, {ge({1, 1}), R(5)}});
    const GradedAlgebra out = sigma_twist(H, tau, SigmaMode::symmetric);
    CHECK(out.epsilon == H.epsilon);
    // sigma((1,0),(0,1)) = 5/6, so <a1,a2> = (5/6) * (-a3).
    Element expected;
    expected.coeffs.emplace(2, R(-5, 6));
    CHECK(out.mult.at(0, 1) == expected);
    CHECK(check_eps_skew(out).pass());
    CHECK(check_hom_eps_jacobi(out).pass());
}

TEST_CASE("symmetric twists preserve the Hom Jacobi pass for random coboundaries") {
    std::mt19937_64 rng(43);
    const std::vector<Rational> pool = {R(1), R(2), R(3), R(5), R(1, 2), R(-1), R(-2), R(2, 3)};
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    for (int trial = 0; trial < 10; ++trial) {
        std::map<GroupElement, Rational> omega;
        for (const auto& g : enumerate_group(H.spec))
            omega[g] = pool[static_cast<std::size_t>(chromalie::testing::draw(rng, 0, 7))];
        const GradedAlgebra out =
            sigma_twist(H, SigmaForm::coboundary(H.spec, omega), SigmaMode::symmetric);
        CHECK(out.epsilon == H.epsilon);
        CHECK(check_eps_skew(out).pass());
        CHECK(check_hom_eps_jacobi(out).pass());
    }
}

TEST_CASE("morphisms survive sigma twists on both sides") {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    const EvenMap f = *H.twist;
    REQUIRE(check_morphism(H, H, f).pass());
    const SigmaForm sigma =
        SigmaForm::bimultiplicative(H.spec, {{R(1), R(-1)}, {R(1), R(1)}});
    const GradedAlgebra twisted = sigma_twist(H, sigma, SigmaMode::multiplier);
    CHECK(check_morphism(twisted, twisted, f).pass());
    const SigmaForm tau = SigmaForm::coboundary(
        H.spec,
        {{ge({0, 0}), R(1)}, {ge({1, 0}), R(2)}, {ge({0, 1}), R(3)}, {ge({1, 1}), R(5)}});
    const GradedAlgebra sym = sigma_twist(H, tau, SigmaMode::symmetric);
    CHECK(check_morphism(sym, sym, f).pass());
}

TEST_CASE("sigma twist rejections") {
    const GradedAlgebra H = build_corpus(CorpusId::sl2_hom);
    // (-1)^(a1 b2) is not symmetric.
    const SigmaForm sigma =
        SigmaForm::bimultiplicative(H.spec, {{R(1), R(-1)}, {R(1), R(1)}});
    CHECK_THROWS_AS(sigma_twist(H, sigma, SigmaMode::symmetric), PreconditionError);

    // Corrupted explicit table is not a multiplier.
    std::map<std::pair<GroupElement, GroupElement>, Rational> table;
    for (const auto& a : enumerate_group(H.spec))
        for (const auto& b : enumerate_group(H.spec)) table[{a, b}] = R(1);
    table[{ge({1, 0}), ge({0, 1})}] = R(-1);
    CHECK_THROWS_AS(sigma_twist(H, SigmaForm::explicit_table(H.spec, table),
                                SigmaMode::multiplier),
                    PreconditionError);

    // A table smaller than the closed degree support misses.
    std::map<std::pair<GroupElement, GroupElement>, Rational> tiny;
    tiny[{ge({0, 0}), ge({0, 0})}] = R(1);
    CHECK_THROWS_AS(sigma_twist(H, SigmaForm::explicit_table(H.spec, tiny), SigmaMode::multiplier),
                    SupportMissError);
}

TEST_CASE("laurent polynomial arithmetic") {
    const LaurentPoly t2 = LaurentPoly::term(2, R(1));
    const LaurentPoly tneg = LaurentPoly::term(-1, R(3));
    CHECK((t2 * tneg).terms().at(1) == 3);
    CHECK((t2 + t2).terms().at(2) == 2);
    LaurentPoly cancel = t2;
    cancel += LaurentPoly::term(2, R(-1));
    CHECK(cancel.is_zero());
    CHECK(t2.to_string() == "t^2");
    LaurentPoly mix = LaurentPoly::term(3, R(1));
    mix += LaurentPoly::term(0, R(-2));
    mix += LaurentPoly::term(-2, R(1, 2));
    CHECK(mix.to_string() == "t^3 - 2 + 1/2*t^-2");
}

TEST_CASE("substitution t -> lambda + t") {
    const LaurentPoly t2 = LaurentPoly::term(2, R(1));
    LaurentPoly expect = LaurentPoly::term(2, R(1));
    expect += LaurentPoly::term(1, R(2));
    expect += LaurentPoly::term(0, R(1));
    CHECK(substitute_shift(t2, R(1)) == expect);

    const LaurentPoly t3 = LaurentPoly::term(3, R(1));
    CHECK(substitute_shift(t3, R(0)) == t3);
    CHECK(substitute_shift(t3, R(2)).to_string() == "t^3 + 6*t^2 + 12*t + 8");

    CHECK_THROWS_AS(substitute_shift(LaurentPoly::term(-1, R(1)), R(1)), Error);
}

TEST_CASE("laurent extension bracket") {
    const LaurentContext ctx = laurent_extend(build_corpus(CorpusId::sl2_hom));
    const ExtendedElement x = extended_term(0, LaurentPoly::term(2, R(1)));  // a1 (x) t^2
    const ExtendedElement y = extended_term(1, LaurentPoly::term(-1, R(1))); // a2 (x) t^-1
    const ExtendedElement expected = extended_term(2, LaurentPoly::term(1, R(-1)));
    CHECK(ctx.bracket(x, y) == expected); // (-a3) (x) t

    // eps(alpha,alpha) = 1 for every sl(2) degree, so [u,u] = 0.
    CHECK(ctx.bracket(x, x).is_zero());

    const LaurentContext witt = laurent_extend(build_corpus(CorpusId::witt_z2));
    const ExtendedElement e1t = extended_term(1, LaurentPoly::term(1, R(1)));
    const ExtendedElement sq = witt.bracket(e1t, e1t);
    CHECK(sq == extended_term(0, LaurentPoly::term(2, R(2)))); // 2 e0 (x) t^2
}

TEST_CASE("laurent extension twist and degrees") {
    const LaurentContext ctx = laurent_extend(build_corpus(CorpusId::sl2_hom));
    const ExtendedElement x = extended_term(0, LaurentPoly::term(2, R(1)));
    CHECK(ctx.twist(x) == extended_term(0, LaurentPoly::term(2, R(-1)))); // zeta (x) id
    CHECK(ctx.degree(x) == ge({1, 0}));
    ExtendedElement mixed = add(x, extended_term(1, LaurentPoly::term(0, R(1))));
    CHECK_FALSE(ctx.degree(mixed).has_value());
    CHECK_FALSE(ctx.is_homogeneous(mixed));
}

TEST_CASE("sampled laurent axiom checks pass on twisted corpus algebras") {
    const LaurentContext ctx = laurent_extend(build_corpus(CorpusId::sl2_hom));
    const auto skew = laurent_check_skew(ctx);
    CHECK(skew.pass);
    CHECK(skew.samples == 64);
    const auto jacobi = laurent_check_hom_jacobi(ctx);
    CHECK(jacobi.pass);
    CHECK(jacobi.samples == 64);

    const LaurentContext witt = laurent_extend(build_corpus(CorpusId::witt_z2));
    CHECK(laurent_check_skew(witt).pass);
    CHECK(laurent_check_hom_jacobi(witt).pass);
}

TEST_CASE("shift substitution is a sampled bracket homomorphism") {
    const LaurentContext witt = laurent_extend(build_corpus(CorpusId::witt_z2));
    CHECK(laurent_check_substitution_endomorphism(witt, R(2)).pass);
    CHECK(laurent_check_substitution_endomorphism(witt, R(0)).pass);
    CHECK(laurent_check_substitution_endomorphism(witt, R(-3, 2)).pass);
    // lambda = 0 is the identity on samples.
    const ExtendedElement x = extended_term(1, LaurentPoly::term(3, R(2)));
    CHECK(witt.substitute(R(0), x) == x);
}
