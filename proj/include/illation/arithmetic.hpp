#pragma once

// Model checking the 1881 number axioms over finite carriers.
//
// Readings used throughout:
//   partial order   R is reflexive, antisymmetric and transitive (a <= relation)
//   connected       any two elements are comparable
//   pred(x)         the R-greatest y != x with yRx
//   succ(x)         the R-least y != x with xRy
//   axiom 3         every element except the R-minimum has a predecessor

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace illation {

inline constexpr std::size_t kMaxAxiomCarrier = 20;

struct NumberStructure {
  std::vector<std::string> carrier;
  std::set<std::pair<std::string, std::string>> R;
  std::string one;

  bool related(const std::string& x, const std::string& y) const { return R.count({x, y}) > 0; }
  // Throws FormatError unless one is in the carrier, R stays inside it and ids are unique.
  void validate() const;
};

NumberStructure chain(int n);

NumberStructure number_structure_from_json(std::string_view json);
std::string number_structure_to_json(const NumberStructure& s);

enum class Axiom { A1, A2, A3, A4a, A4b, A5 };
inline constexpr Axiom kAxioms[] = {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4a, Axiom::A4b, Axiom::A5};

std::string axiom_label(Axiom a);  // "1", "2", "3", "4a", "4b", "5"

struct AxiomVerdict {
  Axiom axiom;
  bool holds = true;
  std::vector<std::string> witness;  // offending elements, empty when the axiom holds
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;  // in kAxioms order

  const AxiomVerdict& at(Axiom a) const;
  bool all_hold() const;
};

// Throws LimitError when the carrier exceeds kMaxAxiomCarrier (axiom 5 visits every subset).
AxiomReport check_axioms(const NumberStructure& s);

std::optional<std::string> predecessor(const NumberStructure& s, const std::string& x);
std::optional<std::string> successor(const NumberStructure& s, const std::string& x);

std::string report_text(const AxiomReport& r);
std::string report_json(const AxiomReport& r);

}  // namespace illation
