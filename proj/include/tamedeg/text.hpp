#pragma once

#include <string>
#include <string_view>

#include "tamedeg/poly.hpp"

namespace tamedeg {

/// Canonical "p/q" form, q > 0, lowest terms; integers print without "/1".
std::string rational_to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; rejects zero denominators and junk.
Rational parse_rational(std::string_view text);

/// Text form, e.g. "x1^2*x2 + 3/2*x3 - 1". Terms in descending graded-lex
/// order; the zero polynomial prints as "0".
std::string to_string(const Polynomial& f);

/// Parses the text form over variables x1..x<nvars>.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

}  // namespace tamedeg
