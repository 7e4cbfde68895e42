#pragma once

// Triadic logic over V (true), L (limit) and F (false), with the negation,
// disjunction and conjunction matrices of the February 1909 notebook.
// No trivalent conditional is defined; formulas containing a claw or one of
// the sixteen binary connectives are rejected.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "illation/formula.hpp"

namespace illation {

// Declared in the canonical row order V, L, F; the truth order is F < L < V.
enum class TriValue { V, L, F };

inline constexpr std::array<TriValue, 3> kTriValues = {TriValue::V, TriValue::L, TriValue::F};

char tri_char(TriValue v);
int tri_rank(TriValue v);  // F = 0, L = 1, V = 2

TriValue tri_neg(TriValue x);
TriValue tri_or(TriValue x, TriValue y);   // Peirce's ⊕
TriValue tri_and(TriValue x, TriValue y);  // Peirce's Z

using TriAssignment = std::map<std::string, TriValue>;

// Throws UnsupportedError naming the first claw or Conn16 node.
TriValue eval3(const Prop& f, const TriAssignment& a);

struct TriTable {
  struct Row {
    std::vector<TriValue> inputs;
    TriValue value;
  };
  std::vector<std::string> variables;
  std::vector<Row> rows;  // 3^n rows, first variable slowest, V before L before F
};

TriTable tri_table(const Prop& f);
std::string to_tsv(const TriTable& table);

}  // namespace illation
