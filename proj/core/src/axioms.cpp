#include "chromalie/axioms.hpp"

#include "chromalie/errors.hpp"

#include <functional>
#include <thread>

namespace chromalie {

namespace {

// Runs fn(t) for every ordered basis triple, partitioned by first index
// across jobs workers. Violations are merged and sorted afterwards, so the
// report never depends on the schedule.
ViolationReport for_all_triples(const GradedAlgebra& A, int jobs,
                                const std::function<void(int, int, int, ViolationReport&)>& fn) {
    const int n = A.dim();
    ViolationReport report;
    report.tuples_checked = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                            static_cast<std::size_t>(n);
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || n < 2) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) fn(i, j, k, report);
    } else {
        std::vector<ViolationReport> parts(static_cast<std::size_t>(jobs));
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (int i = w; i < n; i += jobs)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) fn(i, j, k, parts[static_cast<std::size_t>(w)]);
            });
        for (auto& t : workers) t.join();
        for (auto& part : parts)
            for (auto& v : part.entries) report.entries.push_back(std::move(v));
    }
    report.sort_entries();
    return report;
}

Element hom_jacobi_residual(const GradedAlgebra& A, const EvenMap& zeta, int i, int j, int k) {
    // eps(z,x)[zeta(x),[y,z]] + eps(x,y)[zeta(y),[z,x]] + eps(y,z)[zeta(z),[x,y]]
    Element r = scale(A.eps(k, i), mult_eval(A, zeta.column(i), mult_basis(A, j, k)));
    r = add(r, scale(A.eps(i, j), mult_eval(A, zeta.column(j), mult_basis(A, k, i))));
    r = add(r, scale(A.eps(j, k), mult_eval(A, zeta.column(k), mult_basis(A, i, j))));
    return r;
}

Element basis_associator(const GradedAlgebra& A, const EvenMap& zeta, int i, int j, int k) {
    Element lhs = mult_eval(A, zeta.column(i), mult_basis(A, j, k));
    Element rhs = mult_eval(A, mult_basis(A, i, j), zeta.column(k));
    return sub(lhs, rhs);
}

} // namespace

ViolationReport check_eps_skew(const GradedAlgebra& A) {
    ViolationReport report;
    const int n = A.dim();
    report.tuples_checked = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element residual = add(mult_basis(A, i, j), scale(A.eps(i, j), mult_basis(A, j, i)));
            if (!residual.is_zero()) report.add("eps-skew", {i, j}, std::move(residual));
        }
    report.sort_entries();
    return report;
}

ViolationReport check_eps_jacobi(const GradedAlgebra& A, int jobs) {
    const EvenMap id = identity_map(A.basis);
    return for_all_triples(A, jobs, [&](int i, int j, int k, ViolationReport& r) {
        Element residual = hom_jacobi_residual(A, id, i, j, k);
        if (!residual.is_zero()) r.add("eps-jacobi", {i, j, k}, std::move(residual));
    });
}

ViolationReport check_hom_eps_jacobi(const GradedAlgebra& A, const EvenMap& zeta, int jobs) {
    return for_all_triples(A, jobs, [&](int i, int j, int k, ViolationReport& r) {
        Element residual = hom_jacobi_residual(A, zeta, i, j, k);
        if (!residual.is_zero()) r.add("hom-eps-jacobi", {i, j, k}, std::move(residual));
    });
}

ViolationReport check_hom_eps_jacobi(const GradedAlgebra& A, int jobs) {
    return check_hom_eps_jacobi(A, A.effective_twist(), jobs);
}

ViolationReport check_hom_associativity(const GradedAlgebra& A, const EvenMap& zeta, int jobs) {
    return for_all_triples(A, jobs, [&](int i, int j, int k, ViolationReport& r) {
        Element residual = basis_associator(A, zeta, i, j, k);
        if (!residual.is_zero()) r.add("hom-assoc", {i, j, k}, std::move(residual));
    });
}

ViolationReport check_hom_associativity(const GradedAlgebra& A, int jobs) {
    return check_hom_associativity(A, A.effective_twist(), jobs);
}

Element associator(const GradedAlgebra& A, const EvenMap& zeta, const Element& x,
                   const Element& y, const Element& z) {
    Element lhs = mult_eval(A, apply_map(zeta, x), mult_eval(A, y, z));
    Element rhs = mult_eval(A, mult_eval(A, x, y), apply_map(zeta, z));
    return sub(lhs, rhs);
}

ViolationReport check_flexible(const GradedAlgebra& A, const EvenMap& zeta) {
    ViolationReport report;
    const int n = A.dim();
    report.tuples_checked = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element residual = basis_associator(A, zeta, i, j, i);
            if (!residual.is_zero()) report.add("flexible", {i, j, i}, std::move(residual));
        }
    report.sort_entries();
    return report;
}

ViolationReport check_flexible(const GradedAlgebra& A) {
    return check_flexible(A, A.effective_twist());
}

Element cyclic_S(const GradedAlgebra& A, const EvenMap& zeta, const Element& x, const Element& y,
                 const Element& z) {
    if (x.is_zero() || y.is_zero() || z.is_zero()) return {};
    auto dx = homogeneous_degree(A.basis, x);
    auto dy = homogeneous_degree(A.basis, y);
    auto dz = homogeneous_degree(A.basis, z);
    if (!dx || !dy || !dz) throw Error("cyclic_S requires homogeneous arguments");
    Element r = scale(A.epsilon.eval(*dz, *dx), associator(A, zeta, x, y, z));
    r = add(r, scale(A.epsilon.eval(*dx, *dy), associator(A, zeta, y, z, x)));
    r = add(r, scale(A.epsilon.eval(*dy, *dz), associator(A, zeta, z, x, y)));
    return r;
}

namespace {

Element basis_cyclic_S(const GradedAlgebra& A, const EvenMap& zeta, int i, int j, int k) {
    Element r = scale(A.eps(k, i), basis_associator(A, zeta, i, j, k));
    r = add(r, scale(A.eps(i, j), basis_associator(A, zeta, j, k, i)));
    r = add(r, scale(A.eps(j, k), basis_associator(A, zeta, k, i, j)));
    return r;
}

} // namespace

ViolationReport check_S_symmetry(const GradedAlgebra& A, const EvenMap& zeta, int jobs) {
    return for_all_triples(A, jobs, [&](int i, int j, int k, ViolationReport& r) {
        Element lhs = basis_cyclic_S(A, zeta, i, j, k);
        Rational factor = A.eps(i, j) * A.eps(j, k) * A.eps(k, i);
        Element rhs = scale(factor, basis_cyclic_S(A, zeta, i, k, j));
        Element residual = sub(lhs, rhs);
        if (!residual.is_zero()) r.add("s-symmetry", {i, j, k}, std::move(residual));
    });
}

ViolationReport check_S_symmetry(const GradedAlgebra& A, int jobs) {
    return check_S_symmetry(A, A.effective_twist(), jobs);
}

std::array<int, 3> perm_action(Perm p) {
    switch (p) {
    case Perm::id: return {0, 1, 2};
    case Perm::s1: return {1, 0, 2};
    case Perm::s2: return {0, 2, 1};
    case Perm::s1_s2: return {2, 0, 1};
    case Perm::s2_s1: return {1, 2, 0};
    case Perm::s2_s1_s2: return {2, 1, 0};
    }
    return {0, 1, 2};
}

int perm_sign(Perm p) {
    switch (p) {
    case Perm::id:
    case Perm::s1_s2:
    case Perm::s2_s1: return 1;
    default: return -1;
    }
}

Rational permutation_parity(const BiCharacter& eps, Perm p,
                            const std::array<GroupElement, 3>& d) {
    switch (p) {
    case Perm::id: return Rational(1);
    case Perm::s1: return eps.eval(d[0], d[1]);
    case Perm::s2: return eps.eval(d[1], d[2]);
    case Perm::s1_s2: return eps.eval(d[1], d[2]) * eps.eval(d[0], d[2]);
    case Perm::s2_s1: return eps.eval(d[0], d[1]) * eps.eval(d[0], d[2]);
    case Perm::s2_s1_s2:
        return eps.eval(d[1], d[2]) * eps.eval(d[0], d[2]) * eps.eval(d[0], d[1]);
    }
    return Rational(1);
}

Rational permutation_parity_word(const BiCharacter& eps, std::span<const int> word,
                                 const std::array<GroupElement, 3>& degrees) {
    // |s_i o rest(x)| = |rest(x)| * |s_i(rest(x))|, so walk the word from the
    // rightmost (first applied) transposition, tracking the permuted tuple.
    std::array<GroupElement, 3> cur = degrees;
    Rational parity(1);
    for (std::size_t w = word.size(); w-- > 0;) {
        const int s = word[w];
        if (s != 1 && s != 2) throw Error("permutation word entries must be 1 or 2");
        parity *= eps.eval(cur[static_cast<std::size_t>(s - 1)], cur[static_cast<std::size_t>(s)]);
        std::swap(cur[static_cast<std::size_t>(s - 1)], cur[static_cast<std::size_t>(s)]);
    }
    return parity;
}

std::span<const Perm> subgroup_members(Subgroup g) {
    static constexpr Perm g1[] = {Perm::id};
    static constexpr Perm g2[] = {Perm::id, Perm::s1};
    static constexpr Perm g3[] = {Perm::id, Perm::s2};
    static constexpr Perm g4[] = {Perm::id, Perm::s2_s1_s2};
    static constexpr Perm g5[] = {Perm::id, Perm::s1_s2, Perm::s2_s1};
    static constexpr Perm g6[] = {Perm::id,    Perm::s1,    Perm::s2,
                                  Perm::s1_s2, Perm::s2_s1, Perm::s2_s1_s2};
    switch (g) {
    case Subgroup::G1: return g1;
    case Subgroup::G2: return g2;
    case Subgroup::G3: return g3;
    case Subgroup::G4: return g4;
    case Subgroup::G5: return g5;
    case Subgroup::G6: return g6;
    }
    return g1;
}

std::string to_string(Subgroup g) {
    switch (g) {
    case Subgroup::G1: return "g1-hom-assoc";
    case Subgroup::G2: return "g2-hom-assoc";
    case Subgroup::G3: return "g3-hom-assoc";
    case Subgroup::G4: return "g4-hom-assoc";
    case Subgroup::G5: return "g5-hom-assoc";
    case Subgroup::G6: return "g6-hom-assoc";
    }
    return "g1-hom-assoc";
}

ViolationReport check_G_hom_associative(const GradedAlgebra& A, const EvenMap& zeta, Subgroup g,
                                        int jobs) {
    const auto members = subgroup_members(g);
    const std::string identity = to_string(g);
    return for_all_triples(A, jobs, [&](int i, int j, int k, ViolationReport& r) {
        const std::array<int, 3> t{i, j, k};
        const std::array<GroupElement, 3> degs{A.degree(i), A.degree(j), A.degree(k)};
        Element sum;
        for (Perm p : members) {
            const auto act = perm_action(p);
            Rational coeff = permutation_parity(A.epsilon, p, degs);
            if (perm_sign(p) < 0) coeff = -coeff;
            sum = add(sum, scale(coeff, basis_associator(A, zeta, t[static_cast<std::size_t>(act[0])],
                                                         t[static_cast<std::size_t>(act[1])],
                                                         t[static_cast<std::size_t>(act[2])])));
        }
        if (!sum.is_zero()) r.add(identity, {i, j, k}, std::move(sum));
    });
}

ViolationReport check_G_hom_associative(const GradedAlgebra& A, Subgroup g, int jobs) {
    return check_G_hom_associative(A, A.effective_twist(), g, jobs);
}

StructureConstants color_commutator_table(const GradedAlgebra& A) {
    StructureConstants table;
    const int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element bracket = sub(mult_basis(A, i, j), scale(A.eps(i, j), mult_basis(A, j, i)));
            table.set(i, j, std::move(bracket));
        }
    return table;
}

ViolationReport check_admissible(const GradedAlgebra& A, const EvenMap& zeta, int jobs) {
    GradedAlgebra commutator = A;
    commutator.mult = color_commutator_table(A);
    ViolationReport report = check_hom_eps_jacobi(commutator, zeta, jobs);
    for (auto& v : report.entries) v.identity = "admissible";
    report.sort_entries();
    return report;
}

ViolationReport check_admissible(const GradedAlgebra& A, int jobs) {
    return check_admissible(A, A.effective_twist(), jobs);
}

ViolationReport check_morphism(const GradedAlgebra& A, const GradedAlgebra& B, const EvenMap& f) {
    if (!(A.spec == B.spec)) throw Error("morphism check: group specs differ");
    if (!(A.epsilon == B.epsilon)) throw Error("morphism check: bi-characters differ");
    ViolationReport report;
    ViolationReport even = is_even_map(A.basis, B.basis, f);
    for (auto& v : even.entries)
        report.add("morphism-even", std::move(v.tuple), std::move(v.residual));
    const int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element lhs = apply_map(f, mult_basis(A, i, j));
            Element rhs = mult_eval(B, f.column(i), f.column(j));
            Element residual = sub(lhs, rhs);
            if (!residual.is_zero()) report.add("morphism-product", {i, j}, std::move(residual));
        }
    const EvenMap zeta_a = A.effective_twist();
    const EvenMap zeta_b = B.effective_twist();
    for (int i = 0; i < n; ++i) {
        Element lhs = apply_map(f, zeta_a.column(i));
        Element rhs = apply_map(zeta_b, f.column(i));
        Element residual = sub(lhs, rhs);
        if (!residual.is_zero()) report.add("morphism-twist", {i}, std::move(residual));
    }
    report.tuples_checked = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    report.sort_entries();
    return report;
}

} // namespace chromalie
