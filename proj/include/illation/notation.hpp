#pragma once

// Concrete syntaxes for propositional formulas.
//
//   notation       negation   product       sum   claw   constants
//   PeanoRussell   ~a         a & b         a|b   a>b    #t #f
//   Peirce         -a         a*b, ab       a+b   a -< b #t #f
//   Schroeder      a'         a*b, ab       a+b   a =< b #t #f
//   Polish         Na         Kab           Aab   Cab    (none)
//
// Precedence in the algebraic notations: negation > product > sum > claw.
// Product and sum associate to the left, the claw to the right. Brackets
// (), [] and {} are interchangeable. Polish also reads E as equivalence.
// See docs/grammar.md for the full grammar.

#include <optional>
#include <string>
#include <string_view>

#include "illation/formula.hpp"

namespace illation {

enum class Notation { PeanoRussell, Peirce, Schroeder, Polish };

// "peano-russell", "peirce", "schroeder", "polish"
std::string_view notation_name(Notation n);
std::optional<Notation> notation_from_name(std::string_view name);

// Throws ParseError with the byte offset and the expected-token set.
Prop parse(std::string_view text, Notation notation);

// Nested claws are always bracketed; other operators get the minimum the
// precedence rules need. Conn16 nodes print as their minterm expansion, except
// equivalence in Polish, which prints as E. Constants have no Polish spelling;
// printing one throws UnsupportedError.
std::string print(const Prop& f, Notation notation);

enum class FregeFormat { Ascii, Svg };

// Begriffsschrift-style two-dimensional rendering; output only.
std::string render_frege(const Prop& f, FregeFormat format);

}  // namespace illation
