#pragma once

#include <string>

#include "gl2f/group_operator.hpp"

namespace gl2f {

// Operator-expression surface syntax:
//   expr   := term (('+'|'-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := rational | symbol | '(' expr ')'
//   symbol := 'a'|'b'|'c'|'d'|'Dinv'|'da'|'db'|'dc'|'dd'|'wa'|'wb'|'wc'|'wd'
//   rational := int ['/' uint]
// '*' is operator composition (non-commutative, left-associative); the
// weighted symbols expand as wa = da - d*Dinv, wb = db + c*Dinv,
// wc = dc + b*Dinv, wd = dd - a*Dinv.
// Throws ParseError with position, ZeroDenominator for zero denominators.
GroupOperator parse_operator(const std::string& text);

}  // namespace gl2f
