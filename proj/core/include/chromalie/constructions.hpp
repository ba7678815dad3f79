#ifndef CHROMALIE_CONSTRUCTIONS_HPP
#define CHROMALIE_CONSTRUCTIONS_HPP

#include "chromalie/algebra.hpp"
#include "chromalie/axioms.hpp"
#include "chromalie/laurent.hpp"

namespace chromalie {

/// Sorted unique degrees of the basis entries.
std::vector<GroupElement> degree_support(const GradedAlgebra& A);

/// Color commutator [x,y] = mu(x,y) - eps(x,y) mu(y,x) over the same basis,
/// eps and twist. The input should be Hom-associative with its twist; if it
/// is not, the construction is still emitted with precondition_ok = false
/// and the offending report attached.
struct CommutatorResult {
    GradedAlgebra algebra;
    bool precondition_ok = true;
    ViolationReport hom_assoc;
};
CommutatorResult commutator_algebra(const GradedAlgebra& A);

/// Twisted product mu_zeta = zeta o mu of an associative graded algebra,
/// for an even zeta with zeta o mu = mu o zeta^(x)2. The result is
/// Hom-associative with twist zeta. Throws PreconditionError naming the
/// violating pair or triple.
GradedAlgebra endo_twist_mult(const GradedAlgebra& A, const EvenMap& zeta);

/// Twisted bracket [x,y]_zeta = zeta([x,y]) of a Lie color algebra along an
/// even algebra endomorphism; the result satisfies the Hom eps-Jacobi
/// identity with twist zeta. Throws PreconditionError on a skew/Jacobi
/// failure of the input or when zeta is not an endomorphism.
GradedAlgebra endo_twist_bracket(const GradedAlgebra& L, const EvenMap& zeta);

enum class SigmaMode { symmetric, multiplier };

/// Bracket rescaling [x,y]^sigma = sigma(x,y)[x,y].
///   symmetric  -- sigma must be a symmetric multiplier on the degree
///                 support; eps is unchanged.
///   multiplier -- sigma must be a multiplier; eps is replaced by
///                 eps*delta with delta(a,b) = sigma(a,b)/sigma(b,a).
/// Throws PreconditionError (mode check fails) or SupportMissError.
GradedAlgebra sigma_twist(const GradedAlgebra& L, const SigmaForm& sigma, SigmaMode mode);

} // namespace chromalie

#endif
