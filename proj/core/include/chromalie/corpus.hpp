#ifndef CHROMALIE_CORPUS_HPP
#define CHROMALIE_CORPUS_HPP

#include "chromalie/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chromalie {

/// The example algebras shipped with the library. sl2-color-paper-eps
/// is a deliberate negative fixture: its bi-character uses the exponent
/// a1*b1 + a2*b2, under which the eps-Jacobi identity fails.
enum class CorpusId {
    sl2_color,
    sl2_color_paper_eps,
    sl2_hom,
    heisenberg_color,
    heisenberg_hom,
    witt_z2,
    group_hom_assoc,
    sl2_sigma_twist,
};

std::string to_string(CorpusId id);
std::optional<CorpusId> corpus_id_from_string(const std::string& s);
std::vector<std::string> corpus_ids();

/// Builds a corpus algebra. heisenberg_hom takes two nonzero rational
/// parameters (lambda1, lambda2); every other id takes none. Throws Error
/// on bad parameters.
GradedAlgebra build_corpus(CorpusId id, const std::vector<Rational>& params = {});

/// All diagonal maps with entries drawn from candidates that are algebra
/// endomorphisms. Requires every homogeneous component of L to be at most
/// one-dimensional. The zero map satisfies the endomorphism equations;
/// exclude_zero drops it from the listing.
std::vector<EvenMap> solve_diagonal_endomorphisms(const GradedAlgebra& L,
                                                  const std::vector<Rational>& candidates,
                                                  bool exclude_zero = false);

} // namespace chromalie

#endif
