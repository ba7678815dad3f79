#ifndef CHROMALIE_AXIOMS_HPP
#define CHROMALIE_AXIOMS_HPP

#include "chromalie/algebra.hpp"

#include <array>
#include <span>

namespace chromalie {

// Every check quantifies over basis tuples only; bilinearity of the product
// makes that sufficient. Reports are sorted and schedule-independent, so a
// jobs parameter > 1 only changes wall time, never bytes.

/// [x,y] + eps(x,y)[y,x] over all ordered basis pairs.
ViolationReport check_eps_skew(const GradedAlgebra& A);

/// Cyclic eps(z,x)[x,[y,z]] over all ordered basis triples.
ViolationReport check_eps_jacobi(const GradedAlgebra& A, int jobs = 1);

/// Cyclic eps(z,x)[zeta(x),[y,z]] over all ordered basis triples.
ViolationReport check_hom_eps_jacobi(const GradedAlgebra& A, const EvenMap& zeta, int jobs = 1);
ViolationReport check_hom_eps_jacobi(const GradedAlgebra& A, int jobs = 1);

/// mu(zeta(x), mu(y,z)) = mu(mu(x,y), zeta(z)) over all basis triples.
ViolationReport check_hom_associativity(const GradedAlgebra& A, const EvenMap& zeta, int jobs = 1);
ViolationReport check_hom_associativity(const GradedAlgebra& A, int jobs = 1);

/// a(x,y,z) = mu(zeta(x), mu(y,z)) - mu(mu(x,y), zeta(z)).
Element associator(const GradedAlgebra& A, const EvenMap& zeta, const Element& x,
                   const Element& y, const Element& z);

/// a(x,y,x) = 0 over all ordered basis pairs.
ViolationReport check_flexible(const GradedAlgebra& A, const EvenMap& zeta);
ViolationReport check_flexible(const GradedAlgebra& A);

/// S(x,y,z) = eps(z,x)a(x,y,z) + eps(x,y)a(y,z,x) + eps(y,z)a(z,x,y)
/// for homogeneous x, y, z (zero inputs give zero).
Element cyclic_S(const GradedAlgebra& A, const EvenMap& zeta, const Element& x,
                 const Element& y, const Element& z);

/// S(x,y,z) = eps(x,y)eps(y,z)eps(z,x) S(x,z,y) over all basis triples.
ViolationReport check_S_symmetry(const GradedAlgebra& A, const EvenMap& zeta, int jobs = 1);
ViolationReport check_S_symmetry(const GradedAlgebra& A, int jobs = 1);

/// The six elements of S3 as generated by s1 = (1 2) and s2 = (2 3).
/// Composition is right-to-left: s1_s2 applies s2 to the tuple first.
enum class Perm { id, s1, s2, s1_s2, s2_s1, s2_s1_s2 };

/// Position permutation of (x1,x2,x3) as an index array.
std::array<int, 3> perm_action(Perm p);
/// +1 for even permutations, -1 for odd.
int perm_sign(Perm p);

/// The eps-parity |p(x1,x2,x3)| of a permutation acting on homogeneous
/// arguments with the given degrees (six-line table).
Rational permutation_parity(const BiCharacter& eps, Perm p,
                            const std::array<GroupElement, 3>& degrees);

/// Same parity computed from a composition word in s1, s2 (entries 1 or 2,
/// rightmost applied first). Used to cross-check the table.
Rational permutation_parity_word(const BiCharacter& eps, std::span<const int> word,
                                 const std::array<GroupElement, 3>& degrees);

/// Subgroups of S3: G1 = {id}, G2 = {id,s1}, G3 = {id,s2},
/// G4 = {id,(1 3)}, G5 = A3, G6 = S3.
enum class Subgroup { G1, G2, G3, G4, G5, G6 };

std::span<const Perm> subgroup_members(Subgroup g);
std::string to_string(Subgroup g);

/// sum over G of (-1)^sgn * parity * associator(permuted tuple) = 0
/// over all ordered basis triples.
ViolationReport check_G_hom_associative(const GradedAlgebra& A, const EvenMap& zeta, Subgroup g,
                                        int jobs = 1);
ViolationReport check_G_hom_associative(const GradedAlgebra& A, Subgroup g, int jobs = 1);

/// The color commutator [x,y] = mu(x,y) - eps(x,y) mu(y,x) of every basis
/// pair, as a structure-constants table.
StructureConstants color_commutator_table(const GradedAlgebra& A);

/// Builds the color commutator internally and checks the Hom eps-Jacobi
/// identity on it with the same twist.
ViolationReport check_admissible(const GradedAlgebra& A, const EvenMap& zeta, int jobs = 1);
ViolationReport check_admissible(const GradedAlgebra& A, int jobs = 1);

/// Even, product-preserving, and (twists defaulting to identity)
/// f o zeta_A = zeta_B o f on the basis. Both algebras must share spec
/// and bi-character.
ViolationReport check_morphism(const GradedAlgebra& A, const GradedAlgebra& B, const EvenMap& f);

} // namespace chromalie

#endif
