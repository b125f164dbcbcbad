#ifndef MONODEC_POLYTEXT_HPP
#define MONODEC_POLYTEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "monodec/unipoly.hpp"

namespace monodec {

/// Parses a polynomial in x.
///
///     poly   := ['+' | '-'] term (('+' | '-') term)*
///     term   := coeff | coeff ['*'] 'x' ['^' exp] | 'x' ['^' exp]
///     coeff  := integer ['/' positive-integer]
///
/// Whitespace is ignored and repeated powers are summed. Throws ParseError
/// with the byte offset of the offending character.
UniPoly parse_poly(std::string_view text);

/// Canonical text, ascending powers: "x - 1/2*x^2 + 3x^5". parse_poly
/// inverts it exactly.
std::string format_poly(const UniPoly& p);

/// Coefficients x^0..x^deg as "num/den" strings.
std::vector<std::string> coefficient_strings(const UniPoly& p);

} // namespace monodec

#endif
