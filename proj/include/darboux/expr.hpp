#pragma once

#include <string>
#include <string_view>

#include "darboux/poly.hpp"

namespace darboux {

// Parses a polynomial expression into expanded canonical form.
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*'? factor)*          (adjacent factors multiply)
//   factor   := base ('^' uint)?
//   base     := 'x' | 'y' | rational | '(' expr ')' | '-' factor
//   rational := uint ('/' uint)?
//
// Whitespace is insignificant. Throws parse_error with the offending
// position and the set of tokens that would have been accepted.
Poly parse_poly(std::string_view src);

// Deterministic rendering in descending graded-lex order with explicit '*'
// separators, e.g. "3/2*x*y^2 + 1". Round trip: parse_poly(format_poly(p)) == p.
std::string format_poly(const Poly& p);

}  // namespace darboux
