#pragma once

#include <string>

#include "gt/polynomial.hpp"

namespace gt {

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   var      := 'x[' uint ',' uint ']'
//   rational := '-'? uint ('/' uint)?
Polynomial parse_poly(const std::string& src, const Shape& shape);

// Canonical form: terms in graded-lex descending order joined with " + "/" - ",
// each term "c*x[k,i]^e*..." with unit coefficients omitted.  parse/print are
// mutually inverse on this form.
std::string print_poly(const Polynomial& p);

std::string print_monomial(const Shape& shape, const Monomial& m);

}  // namespace gt
