#pragma once

// Plain-text formats shared by scalars, polynomials and algebra elements.

#include <string>
#include <string_view>
#include <vector>

#include "gwa/exactfield.hpp"

namespace gwa::text {

/// Parses "h^2 - 3/2*h + 1" (in the given variable) or "[1, -3/2, 1]"
/// into ascending rational coefficients. Throws ParseError.
std::vector<Rational> parse_rational_polynomial(std::string_view text, char var);

/// Formats ascending coefficients as "h^2 - 3/2*h + 1"; "0" for the empty list.
std::string format_polynomial(const std::vector<std::string>& coeffs, char var);
std::string format_rational_polynomial(const std::vector<Rational>& coeffs, char var);

std::string_view trim(std::string_view s);

}  // namespace gwa::text
