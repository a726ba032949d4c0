#ifndef IDIST_FORMAT_HPP
#define IDIST_FORMAT_HPP

#include <string>

#include "idist/distribution.hpp"

namespace idist {

/// Element syntax: a decimal integer (prime-subfield value, negatives
/// allowed) or "a^k" / "a" for powers of the primitive element.
/// Parse errors throw Error("ParseError").
FieldElement parse_element(const FieldCtxPtr& ctx, const std::string& text);
std::string element_string(FieldElement x);

/// Polynomial syntax: terms joined by '+', each "c", "c*x", "c*x^d", "x" or
/// "x^d" with coefficients in element syntax; "x^d" alone is the monomial
/// shorthand. Whitespace is ignored.
Polynomial parse_polynomial(const FieldCtxPtr& ctx, const std::string& text);
std::string polynomial_string(const Polynomial& f);

/// Point syntax: "(x:y:z)" with coordinates in element syntax.
ProjPoint parse_point(const FieldCtxPtr& ctx, const std::string& text);
std::string point_string(const ProjPoint& P);

/// Inverse of to_json; validates the parsed distribution.
IntersectionDistribution parse_distribution(const std::string& json);

/// Dense "i,count" rows with a header line.
std::string distribution_csv(const IntersectionDistribution& dist);

}  // namespace idist

#endif
