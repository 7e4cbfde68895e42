#pragma once

// Concrete syntax for relational formulas:
//
//   Pi i . Sum j . l(i,j)
//   (Pi i . p(i)) > Sum j . p(j)
//
// Quantifiers are `Pi` and `Sum` (or `Sigma`); a quantifier body extends as
// far right as possible. Connectives: `~`/`-` negation, `&`/`*` product,
// `|`/`+` sum, `>`/`-<` claw, with the algebraic precedences. Atoms are a
// one-letter predicate applied to lowercase index variables.

#include <string>
#include <string_view>

#include "illation/formula.hpp"

namespace illation {

Rel parse_relational(std::string_view text);
std::string print_relational(const Rel& f);

}  // namespace illation
