#pragma once

#include <string>
#include <string_view>

#include "hallcl/element.hpp"
#include "hallcl/errors.hpp"

namespace hallcl {

/// Parses the coefficient grammar: integers, q, + - * / ^, parentheses,
/// e.g. "(1-q)/(1+q)", "q^-1". Throws ParseError with position and the
/// expected-token description.
QRat parse_coeff(std::string_view text);

/// Parses "[2,1]" / "[]" (weakly decreasing positive parts).
Partition parse_partition(std::string_view text);

/// Parses the element grammar: sum of coeff '*' B '[' parts ']' terms with a
/// single basis tag B in {I,X,e,P,Q,p}, e.g. "I[2] + (1-q)*I[1,1]". "0" is
/// the zero element (I basis).
HallElement parse_element(std::string_view text);

/// Canonical text forms; parse(format(x)) == x.
std::string format_qpoly(const QPoly& p);
std::string format_qrat(const QRat& r);
std::string format_element(const HallElement& x);

} // namespace hallcl
