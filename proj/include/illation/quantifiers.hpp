#pragma once

// Finite-domain semantics for indexed-quantifier formulas. Pi is the logical
// product and Sigma the logical sum over the elements 0..n-1 of a domain.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "illation/formula.hpp"

namespace illation {

inline constexpr std::size_t kDefaultMaxExpandAtoms = 4096;
inline constexpr std::size_t kDefaultMaxSatCells = 24;

using Tuple = std::vector<int>;

struct Relation {
  int arity = 1;
  std::set<Tuple> tuples;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Structure {
  int domain_size = 1;
  std::map<std::string, Relation> predicates;

  bool holds(const std::string& predicate, const Tuple& t) const;
  // Throws FormatError if the domain is empty or a tuple has the wrong length or an out-of-range element.
  void validate() const;
  friend bool operator==(const Structure&, const Structure&) = default;
};

std::string structure_to_json(const Structure& s);
Structure structure_from_json(std::string_view json);

// Name of the propositional variable for an atom: predicate and elements joined by '_' (l_0_1).
std::string atom_name(const std::string& predicate, const Tuple& elements);

Prop expand(const Rel& f, int domain_size, std::size_t max_atoms = kDefaultMaxExpandAtoms);
// Truth value of every atom variable of the structure.
Assignment atom_assignment(const Structure& s);

bool eval_in(const Rel& f, const Structure& s);

// First satisfying interpretation, enumerating predicates in first-occurrence
// order, tuples lexicographically, each cell absent before present.
std::optional<Structure> sat_search(const Rel& f, int domain_size, std::size_t max_cells = kDefaultMaxSatCells);

// Adds element n as a copy of element 0 (every tuple through 0 is mirrored at
// every nonempty choice of its 0-positions). Requires eval_in(f, s); the result
// is re-checked and a failure throws std::logic_error.
Structure extend_model(const Rel& f, const Structure& s);

struct SizeVerdict {
  int size;
  std::optional<Structure> witness;
  std::optional<Structure> extension;  // size + 1 witness built from `witness`
};

struct SatScanReport {
  Rel formula;
  std::vector<SizeVerdict> sizes;
};

SatScanReport sat_scan(const Rel& f, int max_size, std::size_t max_cells = kDefaultMaxSatCells);

struct HerbrandResult {
  std::optional<int> size;  // least k whose expansion is a tautology
  std::optional<Prop> expansion;
};

// Throws LimitError carrying the size at which an expansion became too large to check.
HerbrandResult herbrand_scan(const Rel& f, int max_size, std::size_t max_atoms = kDefaultMaxExpandAtoms);

enum class MitchellKind { All, Some };
Rel mitchell(MitchellKind kind, const std::string& predicate);

enum class Categorical { A, E, I, O };
Rel aeio(Categorical form, const std::string& subject, const std::string& predicate);

// Leibniz indiscernibility: every predicate, at every argument position and in
// every context, holds of i exactly when it holds of j.
bool indiscernible(const Structure& s, int i, int j);

}  // namespace illation
