#pragma once

#include <string>
#include <string_view>

#include "folclass/finite_field.hpp"
#include "folclass/polynomial.hpp"

namespace folclass {

/// "GF(4)", "GF(8;mod=x3+x+1)", "GF(9;mod=x^2+1)". Whitespace is ignored.
const FieldSpec& parse_field_literal(std::string_view text);

/// Polynomial in the generator u, e.g. "u+1", "2*u^2+1", "u*(u+1)".
FieldElement parse_element_literal(std::string_view text, const FieldSpec& field);

/// Polynomial in t with coefficients written in u:
///   poly := term (('+' | '-') term)*
///   term := factor ('*'? factor)*
///   factor := integer | 'u' ('^' int)? | 't' ('^' int)? | '(' poly ')'
/// e.g. "t^2+u*t+1", "(u+1)*t", "0". Throws ParseError carrying the offending position.
Poly parse_poly_literal(std::string_view text, const FieldSpec& field);

}  // namespace folclass
