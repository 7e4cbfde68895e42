#pragma once

// Bivalent semantics: evaluation, truth tables in canonical row order,
// tautology checking by full table and by the indirect (falsification) method,
// the sixteen binary connectives, algebraic normal form, and the congruence check.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "illation/formula.hpp"

namespace illation {

inline constexpr std::size_t kMaxTableVars = 16;

bool eval2(const Prop& f, const Assignment& a);

// Row order: first variable slowest, v before f.
struct TruthTable {
  struct Row {
    std::vector<bool> inputs;
    bool value;
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<std::string> variables;
  std::vector<Row> rows;

  Assignment assignment(std::size_t row) const;
  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

TruthTable truth_table(const Prop& f);
// Same, over an explicit variable order that must cover free_vars(f).
TruthTable truth_table(const Prop& f, const std::vector<std::string>& variables);

// Tab-separated, header = variables + value_label, values spelled v/f.
std::string to_tsv(const TruthTable& table, std::string_view value_label = "value");

struct TautologyResult {
  std::optional<Assignment> counterexample;  // first falsifying row, if any
  bool holds() const { return !counterexample.has_value(); }
};

TautologyResult is_tautology(const Prop& f);

// The indirect method: assume the formula false and propagate forced values.
// Branches are numbered; branch 0 is the root and `parent[b]` its parent.
struct TraceStep {
  int branch;
  std::string variable;
  bool value;
  bool clash;  // this forcing contradicts an earlier one on the same branch
};

struct IndirectResult {
  bool tautology;
  std::vector<TraceStep> trace;
  std::vector<int> parent;
  std::optional<Assignment> counterexample;
};

IndirectResult indirect_falsify(const Prop& f);

// The sixteen binary connectives ----------------------------------------

// Entries in row order (v,v), (v,f), (f,v), (f,f).
using TruthVector = std::array<bool, 4>;

inline constexpr int kConnImplication = 13;
inline constexpr int kConnEquivalence = 8;

TruthVector connective_vector(int index);
int connective_index(const TruthVector& v);
// Sum of the minterms for the rows where the connective is v; index 1 becomes left·¬left.
Prop connective_expansion(int index, const Prop& left, const Prop& right);

// X-frame icon: a 3x3 character cell; the NW, NE, SW, SE diagonal strokes mark
// closed quadrants for rows (v,v), (v,f), (f,v), (f,f) respectively.
std::array<std::string, 3> xframe(int index);
// The sixteen-column table as text, one line per row, columns 1..16.
std::string connective_table_text();

// Algebraic normal form --------------------------------------------------

struct AnfPoly {
  using Monomial = std::vector<std::string>;  // empty monomial is the constant 1
  std::vector<std::string> variables;
  std::vector<Monomial> monomials;  // by degree, then by variable order

  bool evaluate(const Assignment& a) const;
  std::string to_string() const;  // "1 ^ a ^ a*b"; the empty polynomial is "0"
  friend bool operator==(const AnfPoly&, const AnfPoly&) = default;
};

AnfPoly anf(const Prop& f);

// Semantic equality and the congruence rule -------------------------------

// First row (over the union of both variable lists) where the two formulas differ.
std::optional<Assignment> semantic_difference(const Prop& f, const Prop& g);

struct CongruenceVerdict {
  bool premises_equal;
  bool contexts_equal;
  Prop plugged_s;
  Prop plugged_t;
  TruthTable s_table;
  TruthTable t_table;
  TruthTable plugged_s_table;
  TruthTable plugged_t_table;
  std::optional<Assignment> premise_witness;
  std::optional<Assignment> context_witness;
};

// Throws std::invalid_argument when `hole` does not occur in `context`.
CongruenceVerdict congruence_check(const Prop& s, const Prop& t, const Prop& context, std::string_view hole);

std::string format_assignment(const Assignment& a, const std::vector<std::string>& order);

}  // namespace illation
