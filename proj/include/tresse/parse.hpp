#ifndef TRESSE_PARSE_HPP
#define TRESSE_PARSE_HPP

#include "tresse/rational_function.hpp"

#include <string_view>
#include <vector>

namespace tresse {

// Recursive-descent parser for the expression grammar
//   expr   := ('-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := rational | var | '(' expr ')'
// Whitespace is insignificant; variable names match [A-Za-z][A-Za-z0-9_]*.
// Throws parse_error with the offending offset.
RationalFunction parse_expr(std::string_view text, const std::vector<std::string>& variables);

// Same grammar, but the result must be a polynomial (constant denominator).
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

} // namespace tresse

#endif
