#ifndef CHROMALIE_IO_HPP
#define CHROMALIE_IO_HPP

#include "chromalie/algebra.hpp"
#include "chromalie/grading.hpp"

#include <string>

namespace chromalie {

// Interchange format: JSON with exact rationals as strings ("p" or "p/q",
// lowest terms, q > 0). Output key order is fixed (group, epsilon, basis,
// products, twist, flavor) and product keys are sorted by basis index pair,
// so serialize(parse(serialize(A))) == serialize(A) byte for byte.

/// Throws ParseError (with line/column for syntax errors) on malformed
/// input. Semantic axiom violations are not parse errors; run the checks.
GradedAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const GradedAlgebra& A);

/// Sigma files carry no group block; the spec comes from the algebra the
/// form is applied to.
SigmaForm parse_sigma(const std::string& text, const GroupSpec& spec);
std::string serialize_sigma(const SigmaForm& sigma);

/// {"columns": {name: {name: coeff}}} over explicit bases.
EvenMap parse_map(const std::string& text, const GradedBasis& domain, const GradedBasis& codomain);
std::string serialize_map(const EvenMap& f, const GradedBasis& domain, const GradedBasis& codomain);

} // namespace chromalie

#endif
