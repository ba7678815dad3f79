#ifndef CHROMALIE_GRADING_HPP
#define CHROMALIE_GRADING_HPP

#include "chromalie/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromalie {

/// A finitely generated abelian grading group Z^r x Z_{n1} x ... x Z_{nk}.
/// Coordinates are laid out free part first, then torsion.
struct GroupSpec {
    int free_rank = 0;
    std::vector<long> torsion_orders;

    int coords() const { return free_rank + static_cast<int>(torsion_orders.size()); }
    bool is_finite() const { return free_rank == 0; }
    bool operator==(const GroupSpec&) const = default;

    /// Throws Error unless free_rank >= 0 and every torsion order is >= 2.
    void validate() const;
};

/// Group element in canonical form: torsion coordinates reduced to [0, n_i).
struct GroupElement {
    std::vector<long long> coords;
    auto operator<=>(const GroupElement&) const = default;
};

GroupElement group_zero(const GroupSpec& spec);
GroupElement canonical(const GroupSpec& spec, GroupElement g);
bool is_canonical(const GroupSpec& spec, const GroupElement& g);

/// Coordinatewise sum with torsion reduction. Throws Error on a
/// coordinate-count mismatch.
GroupElement group_add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);

/// All elements of a finite group in lexicographic order.
/// Throws Error when free_rank > 0.
std::vector<GroupElement> enumerate_group(const GroupSpec& spec);

/// "(1,0)" rendering used in reports and counterexamples.
std::string to_string(const GroupElement& g);

/// Issues found by validate_bicharacter, empty means valid.
struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

/// Commutation factor stored on generator pairs and extended
/// bimultiplicatively: eps(a,b) = prod b[i][j]^(a_i b_j).
struct BiCharacter {
    GroupSpec spec;
    std::vector<std::vector<Rational>> matrix;

    /// Validated construction; throws Error when validate_bicharacter
    /// reports any issue.
    static BiCharacter checked(GroupSpec spec, std::vector<std::vector<Rational>> matrix);

    Rational eval(const GroupElement& a, const GroupElement& b) const;
    bool operator==(const BiCharacter&) const = default;
};

/// eps == 1 identically.
BiCharacter trivial_bicharacter(const GroupSpec& spec);

/// Checks reciprocity b[i][j]b[j][i] = 1, diagonal b[i][i] in {1,-1}, and
/// torsion compatibility b[i][j]^n = 1 for torsion generators. A zero or
/// missing entry is malformed input and throws Error instead.
ValidationReport validate_bicharacter(const GroupSpec& spec,
                                      const std::vector<std::vector<Rational>>& matrix);

/// Entrywise product; both factors must share a GroupSpec.
BiCharacter product_bicharacter(const BiCharacter& eps, const BiCharacter& delta);

enum class SigmaKind { bimultiplicative, coboundary, explicit_table };

/// A twisting form sigma: Gamma x Gamma -> F*.
///   bimultiplicative -- generator matrix, evaluated like a bi-character
///                       (always a multiplier);
///   coboundary       -- sigma(a,b) = omega(a+b) omega(a)^-1 omega(b)^-1
///                       (always a symmetric multiplier where defined);
///   explicit_table   -- finite table, evaluable only inside it.
struct SigmaForm {
    SigmaKind kind = SigmaKind::bimultiplicative;
    GroupSpec spec;
    std::vector<std::vector<Rational>> matrix;
    std::map<GroupElement, Rational> omega;
    std::map<std::pair<GroupElement, GroupElement>, Rational> table;

    static SigmaForm bimultiplicative(GroupSpec spec, std::vector<std::vector<Rational>> matrix);
    static SigmaForm coboundary(GroupSpec spec, std::map<GroupElement, Rational> omega);
    static SigmaForm explicit_table(GroupSpec spec,
                                    std::map<std::pair<GroupElement, GroupElement>, Rational> table);
};

/// Throws SupportMissError when an explicit table or omega lookup misses.
Rational sigma_eval(const SigmaForm& sigma, const GroupElement& a, const GroupElement& b);

/// Result of a multiplier validation. counterexample holds the first
/// failing pair or triple in lexicographic order on canonical coordinates.
struct MultiplierCheck {
    bool ok = true;
    std::string condition; // "multiplier-law" | "symmetry" | "cyclic-invariance"
    std::vector<GroupElement> counterexample;
};

/// Tests sigma(a,b+c) sigma(b,c) = sigma(a,b) sigma(a+b,c) on support^3.
MultiplierCheck validate_multiplier(const SigmaForm& sigma, std::vector<GroupElement> support);

/// Tests symmetry sigma(b,c) = sigma(c,b) on pairs, then cyclic invariance
/// of sigma(a,b) sigma(c,a+b) on triples.
MultiplierCheck validate_symmetric_multiplier(const SigmaForm& sigma,
                                              std::vector<GroupElement> support);

/// delta(a,b) = sigma(a,b) sigma(b,a)^-1 for a validated multiplier sigma.
class DeltaEvaluator {
public:
    explicit DeltaEvaluator(SigmaForm sigma) : sigma_(std::move(sigma)) {}

    Rational eval(const GroupElement& a, const GroupElement& b) const;

    /// Materializes delta as a BiCharacter from its generator values.
    /// For an explicit sigma this needs all generator pairs in the table
    /// (SupportMissError otherwise) and cross-checks the matrix against the
    /// pointwise quotient everywhere the table allows.
    BiCharacter materialize() const;

    const SigmaForm& sigma() const { return sigma_; }

private:
    SigmaForm sigma_;
};

DeltaEvaluator delta_from_sigma(const SigmaForm& sigma);

} // namespace chromalie

#endif
