#pragma once

#include <string>

#include "rephom/gca/derivation.hpp"

namespace rephom::gca {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' ['-'] integer)?
//   atom   := integer ['/' integer] | identifier | '(' expr ')'
// Identifiers are generator names: [A-Za-z_][A-Za-z0-9_.']*.
AlgebraElement parse_expression(const AlgebraPtr& alg, const std::string& text);

struct DgaPresentation {
  AlgebraPtr algebra;
  Derivation differential;
};

// {"generators":[{"name","degree","weight"}], "invertible":[...],
//  "relations":["expr", ...], "differential":{"gen":"expr"}}
DgaPresentation dga_from_json(const std::string& text);
std::string dga_to_json(const Derivation& d);

}  // namespace rephom::gca
