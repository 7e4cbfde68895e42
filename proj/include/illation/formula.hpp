#pragma once

// Shared abstract syntax: propositional formulas (Prop) and indexed-quantifier
// relational formulas (Rel). Both are immutable trees with shared subterms, so
// copies are cheap and values can be handed between threads freely.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace illation {

struct PropNode;
struct RelNode;

class Prop {
 public:
  explicit Prop(std::shared_ptr<const PropNode> node) : node_(std::move(node)) {}

  const PropNode& node() const { return *node_; }
  template <class T>
  const T* as() const;

  // Structural equality.
  friend bool operator==(const Prop& a, const Prop& b);

 private:
  std::shared_ptr<const PropNode> node_;
};

namespace prop {

struct Var {
  std::string name;
};
struct Const {
  bool value;
};
struct Neg {
  Prop inner;
};
// Peirce's claw: material implication, kept distinct from Sum(Neg a, b) so notations round-trip.
struct Claw {
  Prop antecedent;
  Prop consequent;
};
struct Prod {
  Prop left;
  Prop right;
};
struct Sum {
  Prop left;
  Prop right;
};
// One of the sixteen binary connectives, numbered by the 1902 column table (1..16).
struct Conn16 {
  int index;
  Prop left;
  Prop right;
};

Prop var(std::string name);
Prop verum();
Prop falsum();
Prop constant(bool value);
Prop neg(Prop inner);
Prop claw(Prop antecedent, Prop consequent);
Prop prod(Prop left, Prop right);
Prop sum(Prop left, Prop right);
Prop conn16(int index, Prop left, Prop right);

}  // namespace prop

using PropVariant =
    std::variant<prop::Var, prop::Const, prop::Neg, prop::Claw, prop::Prod, prop::Sum, prop::Conn16>;

struct PropNode {
  PropVariant value;
};

template <class T>
const T* Prop::as() const {
  return std::get_if<T>(&node_->value);
}

// A variable name is one letter a-z, or an indexed atom: a letter followed by
// one or more `_<digits>` groups (`l_0_1`), as produced by quantifier expansion.
bool is_valid_var_name(std::string_view name);

// Bivalent assignment; `true` is v, `false` is f.
using Assignment = std::map<std::string, bool>;

std::vector<std::string> free_vars(const Prop& f);
bool occurs(const Prop& f, std::string_view name);
Prop substitute(const Prop& context, std::string_view hole, const Prop& filler);
std::size_t node_count(const Prop& f);
std::size_t depth(const Prop& f);
// Short description of a node's constructor for diagnostics ("claw", "connective 13", ...).
std::string describe(const Prop& f);

// Relational formulas ----------------------------------------------------

enum class QuantKind { Pi, Sigma };

class Rel {
 public:
  explicit Rel(std::shared_ptr<const RelNode> node) : node_(std::move(node)) {}

  const RelNode& node() const { return *node_; }
  template <class T>
  const T* as() const;

  friend bool operator==(const Rel& a, const Rel& b);

 private:
  std::shared_ptr<const RelNode> node_;
};

namespace rel {

struct Atom {
  std::string predicate;
  std::vector<std::string> indices;
};
struct Neg {
  Rel inner;
};
struct Claw {
  Rel antecedent;
  Rel consequent;
};
struct Prod {
  Rel left;
  Rel right;
};
struct Sum {
  Rel left;
  Rel right;
};
struct Quant {
  QuantKind kind;
  std::string var;
  Rel body;
};

// Predicate names are single letters so expanded atoms stay valid propositional variables.
Rel atom(std::string predicate, std::vector<std::string> indices);
Rel neg(Rel inner);
Rel claw(Rel antecedent, Rel consequent);
Rel prod(Rel left, Rel right);
Rel sum(Rel left, Rel right);
Rel pi(std::string var, Rel body);
Rel sigma(std::string var, Rel body);
Rel quant(QuantKind kind, std::string var, Rel body);

}  // namespace rel

using RelVariant = std::variant<rel::Atom, rel::Neg, rel::Claw, rel::Prod, rel::Sum, rel::Quant>;

struct RelNode {
  RelVariant value;
};

template <class T>
const T* Rel::as() const {
  return std::get_if<T>(&node_->value);
}

struct PredicateSig {
  std::string name;
  int arity;
  friend bool operator==(const PredicateSig&, const PredicateSig&) = default;
};

// Predicates in first-occurrence order. Throws EvalError if one predicate is used with two arities.
std::vector<PredicateSig> signature(const Rel& f);
// Index variables occurring free, in first-occurrence order.
std::vector<std::string> free_indices(const Rel& f);
bool is_closed(const Rel& f);
std::size_t depth(const Rel& f);

}  // namespace illation
