#ifndef CHROMALIE_ALGEBRA_HPP
#define CHROMALIE_ALGEBRA_HPP

#include "chromalie/grading.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromalie {

struct BasisEntry {
    std::string name;
    GroupElement degree;
    bool operator==(const BasisEntry&) const = default;
};

/// Ordered homogeneous basis; file order is iteration order everywhere.
struct GradedBasis {
    std::vector<BasisEntry> entries;

    int size() const { return static_cast<int>(entries.size()); }
    const GroupElement& degree(int i) const { return entries[static_cast<std::size_t>(i)].degree; }
    const std::string& name(int i) const { return entries[static_cast<std::size_t>(i)].name; }
    int index_of(const std::string& name) const; // -1 when absent
    bool operator==(const GradedBasis&) const = default;
};

/// Sparse vector over a graded basis; no zero coefficients are stored.
struct Element {
    std::map<int, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Element&) const = default;
};

Element element_unit(int i);
Element element_term(int i, Rational c);
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element negate(Element a);
Element scale(const Rational& c, const Element& a);

/// Degree of a homogeneous nonzero element; nullopt for zero or mixed.
std::optional<GroupElement> homogeneous_degree(const GradedBasis& basis, const Element& x);
bool is_homogeneous(const GradedBasis& basis, const Element& x); // zero counts

/// "a1 - 2*a3" rendering; terms in basis order.
std::string element_to_string(const GradedBasis& basis, const Element& x);

/// Sparse structure constants; absent keys mean the zero product.
struct StructureConstants {
    std::map<std::pair<int, int>, Element> products;

    const Element& at(int i, int j) const; // zero element when absent
    void set(int i, int j, Element value); // drops zero values
    bool operator==(const StructureConstants&) const = default;
};

/// Degree-preserving linear map given by images of domain basis vectors;
/// absent columns are zero.
struct EvenMap {
    std::map<int, Element> columns;

    const Element& column(int i) const;
    void set_column(int i, Element value);
    bool operator==(const EvenMap&) const = default;
};

EvenMap identity_map(const GradedBasis& basis);
Element apply_map(const EvenMap& f, const Element& x);
/// (f o g): first g, then f. Columns of g must live over f's domain basis.
EvenMap compose_maps(const EvenMap& f, const EvenMap& g);

enum class Flavor { raw, lie_color, hom_lie_color, hom_color };

std::string to_string(Flavor f);
std::optional<Flavor> flavor_from_string(const std::string& s);

/// A graded algebra: basis with degrees, bi-character, sparse products,
/// optional twisting map, and the structure the caller claims it has.
struct GradedAlgebra {
    GroupSpec spec;
    BiCharacter epsilon;
    GradedBasis basis;
    StructureConstants mult;
    std::optional<EvenMap> twist;
    Flavor flavor = Flavor::raw;

    int dim() const { return basis.size(); }
    const GroupElement& degree(int i) const { return basis.degree(i); }
    Rational eps(int i, int j) const { return epsilon.eval(degree(i), degree(j)); }
    /// The twist when present, identity otherwise.
    EvenMap effective_twist() const;
};

/// One failed identity instance, pinned to a basis tuple with the exact
/// left-minus-right residual.
struct Violation {
    std::string identity;
    std::vector<int> tuple;
    Element residual;

    auto key() const { return std::tie(identity, tuple); }
};

struct ViolationReport {
    std::vector<Violation> entries; // sorted by (identity, tuple)
    std::size_t tuples_checked = 0;

    bool pass() const { return entries.empty(); }
    void sort_entries();
    void add(std::string identity, std::vector<int> tuple, Element residual);
};

std::string violation_to_string(const GradedBasis& basis, const Violation& v);

/// Bilinear extension of the structure constants; exact in both slots.
Element mult_eval(const GradedAlgebra& A, const Element& x, const Element& y);
/// Product of two basis vectors (table lookup).
const Element& mult_basis(const GradedAlgebra& A, int i, int j);

/// One violation per stored product leaving its required homogeneous
/// component A_{deg i + deg j}. Residual is the offending part.
ViolationReport check_evenness(const GradedAlgebra& A);

/// Degree preservation of a map between (possibly distinct) bases.
ViolationReport is_even_map(const GradedBasis& domain, const GradedBasis& codomain,
                            const EvenMap& f);
ViolationReport is_even_map(const GradedAlgebra& A, const EvenMap& f);

/// zeta(mu(x_i,x_j)) = mu(zeta x_i, zeta x_j) over all basis pairs.
struct PairCheck {
    bool ok = true;
    std::pair<int, int> pair{-1, -1};
    Element lhs, rhs;
};
PairCheck is_endomorphism(const GradedAlgebra& A, const EvenMap& zeta);

/// Fills [x_j,x_i] := -eps(x_j,x_i) [x_i,x_j] for stored pairs whose
/// mirror is absent. Diagonal entries stay as given (absent = zero).
struct SkewCompletion {
    StructureConstants table;
    int filled = 0;
    /// Diagonal defaults that the grading argument does not justify:
    /// eps(d,d) = -1 while the component of degree 2d is nonzero.
    std::vector<std::string> notes;
};
SkewCompletion skew_complete(const GradedAlgebra& A);

} // namespace chromalie

#endif
