#include "chromalie/constructions.hpp"

#include "chromalie/errors.hpp"

#include <algorithm>

namespace chromalie {

std::vector<GroupElement> degree_support(const GradedAlgebra& A) {
    std::vector<GroupElement> support;
    for (const auto& entry : A.basis.entries) support.push_back(entry.degree);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
}

CommutatorResult commutator_algebra(const GradedAlgebra& A) {
    CommutatorResult result;
    result.hom_assoc = check_hom_associativity(A);
    result.precondition_ok = result.hom_assoc.pass();
    result.algebra = A;
    result.algebra.mult = color_commutator_table(A);
    result.algebra.flavor = Flavor::hom_lie_color;
    return result;
}

namespace {

std::string pair_name(const GradedAlgebra& A, int i, int j) {
    return "(" + A.basis.name(i) + "," + A.basis.name(j) + ")";
}

void require_even(const GradedAlgebra& A, const EvenMap& zeta) {
    ViolationReport even = is_even_map(A, zeta);
    if (!even.pass())
        throw PreconditionError("twist map is not even at basis vector " +
                                A.basis.name(even.entries.front().tuple.front()));
}

} // namespace

GradedAlgebra endo_twist_mult(const GradedAlgebra& A, const EvenMap& zeta) {
    require_even(A, zeta);
    const int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element lhs = mult_eval(A, mult_basis(A, i, j), element_unit(k));
                Element rhs = mult_eval(A, element_unit(i), mult_basis(A, j, k));
                if (!(lhs == rhs))
                    throw PreconditionError("product is not associative at (" + A.basis.name(i) +
                                            "," + A.basis.name(j) + "," + A.basis.name(k) + ")");
            }
    PairCheck hyp = is_endomorphism(A, zeta);
    if (!hyp.ok)
        throw PreconditionError("zeta o mu = mu o zeta^(x)2 fails at " +
                                pair_name(A, hyp.pair.first, hyp.pair.second));
    GradedAlgebra out = A;
    StructureConstants twisted;
    for (const auto& [key, value] : A.mult.products)
        twisted.set(key.first, key.second, apply_map(zeta, value));
    out.mult = std::move(twisted);
    out.twist = zeta;
    out.flavor = Flavor::hom_color;
    return out;
}

GradedAlgebra endo_twist_bracket(const GradedAlgebra& L, const EvenMap& zeta) {
    require_even(L, zeta);
    ViolationReport skew = check_eps_skew(L);
    if (!skew.pass())
        throw PreconditionError("input is not eps-skew-symmetric: " +
                                violation_to_string(L.basis, skew.entries.front()));
    ViolationReport jacobi = check_eps_jacobi(L);
    if (!jacobi.pass())
        throw PreconditionError("input fails the eps-Jacobi identity: " +
                                violation_to_string(L.basis, jacobi.entries.front()));
    PairCheck endo = is_endomorphism(L, zeta);
    if (!endo.ok)
        throw PreconditionError("map is not an algebra endomorphism at " +
                                pair_name(L, endo.pair.first, endo.pair.second));
    GradedAlgebra out = L;
    StructureConstants twisted;
    for (const auto& [key, value] : L.mult.products)
        twisted.set(key.first, key.second, apply_map(zeta, value));
    out.mult = std::move(twisted);
    out.twist = zeta;
    out.flavor = Flavor::hom_lie_color;
    return out;
}

GradedAlgebra sigma_twist(const GradedAlgebra& L, const SigmaForm& sigma, SigmaMode mode) {
    if (!(sigma.spec == L.spec)) throw Error("sigma twist: group specs differ");
    const std::vector<GroupElement> support = degree_support(L);
    if (mode == SigmaMode::symmetric) {
        MultiplierCheck check = validate_symmetric_multiplier(sigma, support);
        if (!check.ok) {
            std::string at;
            for (const auto& g : check.counterexample) at += (at.empty() ? "" : ",") + to_string(g);
            throw PreconditionError("sigma is not a symmetric multiplier (" + check.condition +
                                    " fails at " + at + ")");
        }
    } else {
        MultiplierCheck check = validate_multiplier(sigma, support);
        if (!check.ok) {
            std::string at;
            for (const auto& g : check.counterexample) at += (at.empty() ? "" : ",") + to_string(g);
            throw PreconditionError("sigma is not a multiplier (fails at " + at + ")");
        }
    }
    GradedAlgebra out = L;
    StructureConstants twisted;
    for (const auto& [key, value] : L.mult.products) {
        const Rational factor = sigma_eval(sigma, L.degree(key.first), L.degree(key.second));
        twisted.set(key.first, key.second, scale(factor, value));
    }
    out.mult = std::move(twisted);
    if (mode == SigmaMode::multiplier) {
        BiCharacter delta = delta_from_sigma(sigma).materialize();
        out.epsilon = product_bicharacter(L.epsilon, delta);
    }
    return out;
}

} // namespace chromalie
