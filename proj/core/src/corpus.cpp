#include "chromalie/corpus.hpp"

#include "chromalie/constructions.hpp"
#include "chromalie/errors.hpp"

#include <map>

namespace chromalie {

namespace {

GroupElement ge(std::vector<long long> coords) { return GroupElement{std::move(coords)}; }

Rational rat(long n) { return Rational(n); }

std::vector<std::vector<Rational>> sign_matrix(const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : m) {
        std::vector<Rational> r;
        for (int v : row) r.emplace_back(v);
        out.push_back(std::move(r));
    }
    return out;
}

// Color sl(2): Z2 x Z2 grading, brackets <a1,a2> = -a3, <a2,a3> = a1,
// <a3,a1> = a2, remaining pairs filled by eps-skew.
GradedAlgebra build_sl2(const std::vector<std::vector<int>>& eps_matrix) {
    GradedAlgebra L;
    L.spec = GroupSpec{0, {2, 2}};
    L.epsilon = BiCharacter::checked(L.spec, sign_matrix(eps_matrix));
    L.basis.entries = {{"a1", ge({1, 0})}, {"a2", ge({0, 1})}, {"a3", ge({1, 1})}};
    L.mult.set(0, 1, element_term(2, rat(-1)));
    L.mult.set(1, 2, element_term(0, rat(1)));
    L.mult.set(2, 0, element_term(1, rat(1)));
    L.flavor = Flavor::lie_color;
    L.mult = skew_complete(L).table;
    return L;
}

EvenMap diagonal_map(const std::vector<Rational>& entries) {
    EvenMap f;
    for (std::size_t i = 0; i < entries.size(); ++i)
        f.set_column(static_cast<int>(i), element_term(static_cast<int>(i), entries[i]));
    return f;
}

GradedAlgebra build_heisenberg_color() {
    GradedAlgebra H;
    H.spec = GroupSpec{0, {2, 2, 2}};
    H.epsilon = BiCharacter::checked(H.spec, sign_matrix({{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}));
    H.basis.entries = {{"e1", ge({1, 1, 0})}, {"e2", ge({1, 0, 1})}, {"e3", ge({0, 1, 1})}};
    H.mult.set(0, 1, element_term(2, rat(1)));
    H.flavor = Flavor::lie_color;
    H.mult = skew_complete(H).table;
    return H;
}

GradedAlgebra build_witt_z2() {
    GradedAlgebra L;
    L.spec = GroupSpec{0, {2}};
    L.epsilon = BiCharacter::checked(L.spec, sign_matrix({{-1}}));
    L.basis.entries = {{"e0", ge({0})}, {"e1", ge({1})}};
    // [e_a,e_b] = (s(b) - eps(a,b) s(a)) e_{a+b} with s identically 1:
    // only [e1,e1] = 2 e0 survives.
    const std::map<GroupElement, Rational> s = {{ge({0}), rat(1)}, {ge({1}), rat(1)}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const GroupElement sum = group_add(L.spec, L.degree(i), L.degree(j));
            const int target = sum == ge({0}) ? 0 : 1;
            Rational coeff = s.at(L.degree(j)) - L.eps(i, j) * s.at(L.degree(i));
            L.mult.set(i, j, element_term(target, std::move(coeff)));
        }
    L.flavor = Flavor::lie_color;
    return L;
}

GradedAlgebra build_group_algebra_z2() {
    GradedAlgebra A;
    A.spec = GroupSpec{0, {2}};
    A.epsilon = trivial_bicharacter(A.spec);
    A.basis.entries = {{"u0", ge({0})}, {"u1", ge({1})}};
    A.mult.set(0, 0, element_unit(0));
    A.mult.set(0, 1, element_unit(1));
    A.mult.set(1, 0, element_unit(1));
    A.mult.set(1, 1, element_unit(0));
    A.flavor = Flavor::raw;
    return A;
}

} // namespace

std::string to_string(CorpusId id) {
    switch (id) {
    case CorpusId::sl2_color: return "sl2-color";
    case CorpusId::sl2_color_paper_eps: return "sl2-color-paper-eps";
    case CorpusId::sl2_hom: return "sl2-hom";
    case CorpusId::heisenberg_color: return "heisenberg-color";
    case CorpusId::heisenberg_hom: return "heisenberg-hom";
    case CorpusId::witt_z2: return "witt-z2";
    case CorpusId::group_hom_assoc: return "group-hom-assoc";
    case CorpusId::sl2_sigma_twist: return "sl2-sigma-twist";
    }
    return "sl2-color";
}

std::optional<CorpusId> corpus_id_from_string(const std::string& s) {
    for (CorpusId id : {CorpusId::sl2_color, CorpusId::sl2_color_paper_eps, CorpusId::sl2_hom,
                        CorpusId::heisenberg_color, CorpusId::heisenberg_hom, CorpusId::witt_z2,
                        CorpusId::group_hom_assoc, CorpusId::sl2_sigma_twist})
        if (to_string(id) == s) return id;
    return std::nullopt;
}

std::vector<std::string> corpus_ids() {
    std::vector<std::string> out;
    for (CorpusId id : {CorpusId::sl2_color, CorpusId::sl2_color_paper_eps, CorpusId::sl2_hom,
                        CorpusId::heisenberg_color, CorpusId::heisenberg_hom, CorpusId::witt_z2,
                        CorpusId::group_hom_assoc, CorpusId::sl2_sigma_twist})
        out.push_back(to_string(id));
    return out;
}

GradedAlgebra build_corpus(CorpusId id, const std::vector<Rational>& params) {
    if (id != CorpusId::heisenberg_hom && !params.empty())
        throw Error(to_string(id) + " takes no parameters");
    switch (id) {
    case CorpusId::sl2_color:
        return build_sl2({{1, -1}, {-1, 1}});
    case CorpusId::sl2_color_paper_eps: {
        // Variant with exponent a1*b1 + a2*b2 instead of a1*b2 + a2*b1;
        // fails the eps-Jacobi check at (a1,a1,a2) and is kept as a
        // negative fixture.
        return build_sl2({{-1, 1}, {1, -1}});
    }
    case CorpusId::sl2_hom: {
        GradedAlgebra L = build_sl2({{1, -1}, {-1, 1}});
        return endo_twist_bracket(L, diagonal_map({rat(-1), rat(-1), rat(1)}));
    }
    case CorpusId::heisenberg_color:
        return build_heisenberg_color();
    case CorpusId::heisenberg_hom: {
        if (params.size() != 2)
            throw Error("heisenberg-hom takes two parameters lambda1 lambda2");
        const Rational& l1 = params[0];
        const Rational& l2 = params[1];
        if (is_zero(l1) || is_zero(l2)) throw Error("heisenberg-hom parameters must be nonzero");
        GradedAlgebra H = build_heisenberg_color();
        return endo_twist_bracket(H, diagonal_map({l1, l2, l1 * l2}));
    }
    case CorpusId::witt_z2:
        return build_witt_z2();
    case CorpusId::group_hom_assoc: {
        GradedAlgebra A = build_group_algebra_z2();
        EvenMap zeta = diagonal_map({rat(1), rat(-1)});
        return endo_twist_mult(A, zeta);
    }
    case CorpusId::sl2_sigma_twist: {
        GradedAlgebra L = build_corpus(CorpusId::sl2_hom);
        SigmaForm sigma = SigmaForm::bimultiplicative(L.spec, sign_matrix({{1, -1}, {1, 1}}));
        return sigma_twist(L, sigma, SigmaMode::multiplier);
    }
    }
    throw Error("unknown corpus id");
}

std::vector<EvenMap> solve_diagonal_endomorphisms(const GradedAlgebra& L,
                                                  const std::vector<Rational>& candidates,
                                                  bool exclude_zero) {
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (L.degree(i) == L.degree(j))
                throw Error("diagonal endomorphism search needs one-dimensional components");
    std::vector<EvenMap> found;
    if (candidates.empty() || n == 0) return found;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<Rational> entries;
        bool all_zero = true;
        for (int i = 0; i < n; ++i) {
            entries.push_back(candidates[pick[static_cast<std::size_t>(i)]]);
            if (!is_zero(entries.back())) all_zero = false;
        }
        if (!(exclude_zero && all_zero)) {
            EvenMap f = diagonal_map(entries);
            if (is_endomorphism(L, f).ok) found.push_back(std::move(f));
        }
        int i = n;
        while (i > 0) {
            --i;
            if (++pick[static_cast<std::size_t>(i)] < candidates.size()) break;
            pick[static_cast<std::size_t>(i)] = 0;
            if (i == 0) return found;
        }
    }
}

} // namespace chromalie
