#include "illation/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "illation/detail/overloaded.hpp"
#include "illation/errors.hpp"

namespace illation {

namespace {

using detail::overloaded;

Prop make(PropVariant v) { return Prop(std::make_shared<const PropNode>(PropNode{std::move(v)})); }
Rel make(RelVariant v) { return Rel(std::make_shared<const RelNode>(RelNode{std::move(v)})); }

bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

void collect_vars(const Prop& f, std::vector<std::string>& out) {
  std::visit(overloaded{
                 [&](const prop::Var& v) {
                   if (std::find(out.begin(), out.end(), v.name) == out.end()) out.push_back(v.name);
                 },
                 [](const prop::Const&) {},
                 [&](const prop::Neg& n) { collect_vars(n.inner, out); },
                 [&](const prop::Claw& c) {
                   collect_vars(c.antecedent, out);
                   collect_vars(c.consequent, out);
                 },
                 [&](const auto& b) {
                   collect_vars(b.left, out);
                   collect_vars(b.right, out);
                 },
             },
             f.node().value);
}

}  // namespace

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !is_ascii_letter(name[0])) return false;
  if (name.size() == 1) return name[0] >= 'a' && name[0] <= 'z';
  std::size_t i = 1;
  while (i < name.size()) {
    if (name[i] != '_') return false;
    ++i;
    std::size_t start = i;
    while (i < name.size() && is_ascii_digit(name[i])) ++i;
    if (i == start) return false;
  }
  return true;
}

bool operator==(const Prop& a, const Prop& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node().value;
  const auto& vb = b.node().value;
  if (va.index() != vb.index()) return false;
  return std::visit(overloaded{
                        [&](const prop::Var& x) { return x.name == std::get<prop::Var>(vb).name; },
                        [&](const prop::Const& x) { return x.value == std::get<prop::Const>(vb).value; },
                        [&](const prop::Neg& x) { return x.inner == std::get<prop::Neg>(vb).inner; },
                        [&](const prop::Claw& x) {
                          const auto& y = std::get<prop::Claw>(vb);
                          return x.antecedent == y.antecedent && x.consequent == y.consequent;
                        },
                        [&](const prop::Conn16& x) {
                          const auto& y = std::get<prop::Conn16>(vb);
                          return x.index == y.index && x.left == y.left && x.right == y.right;
                        },
                        [&](const auto& x) {
                          const auto& y = std::get<std::decay_t<decltype(x)>>(vb);
                          return x.left == y.left && x.right == y.right;
                        },
                    },
                    va);
}

namespace prop {

Prop var(std::string name) {
  if (!is_valid_var_name(name)) throw std::invalid_argument("invalid variable name '" + name + "'");
  return make(Var{std::move(name)});
}
Prop verum() { return make(Const{true}); }
Prop falsum() { return make(Const{false}); }
Prop constant(bool value) { return make(Const{value}); }
Prop neg(Prop inner) { return make(Neg{std::move(inner)}); }
Prop claw(Prop antecedent, Prop consequent) { return make(Claw{std::move(antecedent), std::move(consequent)}); }
Prop prod(Prop left, Prop right) { return make(Prod{std::move(left), std::move(right)}); }
Prop sum(Prop left, Prop right) { return make(Sum{std::move(left), std::move(right)}); }
Prop conn16(int index, Prop left, Prop right) {
  if (index < 1 || index > 16) throw std::invalid_argument("connective index must be in 1..16");
  return make(Conn16{index, std::move(left), std::move(right)});
}

}  // namespace prop

std::vector<std::string> free_vars(const Prop& f) {
  std::vector<std::string> out;
  collect_vars(f, out);
  return out;
}

bool occurs(const Prop& f, std::string_view name) {
  return std::visit(overloaded{
                        [&](const prop::Var& v) { return v.name == name; },
                        [](const prop::Const&) { return false; },
                        [&](const prop::Neg& n) { return occurs(n.inner, name); },
                        [&](const prop::Claw& c) { return occurs(c.antecedent, name) || occurs(c.consequent, name); },
                        [&](const auto& b) { return occurs(b.left, name) || occurs(b.right, name); },
                    },
                    f.node().value);
}

Prop substitute(const Prop& context, std::string_view hole, const Prop& filler) {
  return std::visit(
      overloaded{
          [&](const prop::Var& v) { return v.name == hole ? filler : context; },
          [&](const prop::Const&) { return context; },
          [&](const prop::Neg& n) { return prop::neg(substitute(n.inner, hole, filler)); },
          [&](const prop::Claw& c) {
            return prop::claw(substitute(c.antecedent, hole, filler), substitute(c.consequent, hole, filler));
          },
          [&](const prop::Prod& b) {
            return prop::prod(substitute(b.left, hole, filler), substitute(b.right, hole, filler));
          },
          [&](const prop::Sum& b) {
            return prop::sum(substitute(b.left, hole, filler), substitute(b.right, hole, filler));
          },
          [&](const prop::Conn16& b) {
            return prop::conn16(b.index, substitute(b.left, hole, filler), substitute(b.right, hole, filler));
          },
      },
      context.node().value);
}

std::size_t node_count(const Prop& f) {
  return std::visit(overloaded{
                        [](const prop::Var&) -> std::size_t { return 1; },
                        [](const prop::Const&) -> std::size_t { return 1; },
                        [](const prop::Neg& n) { return 1 + node_count(n.inner); },
                        [](const prop::Claw& c) { return 1 + node_count(c.antecedent) + node_count(c.consequent); },
                        [](const auto& b) { return 1 + node_count(b.left) + node_count(b.right); },
                    },
                    f.node().value);
}

std::size_t depth(const Prop& f) {
  return std::visit(overloaded{
                        [](const prop::Var&) -> std::size_t { return 0; },
                        [](const prop::Const&) -> std::size_t { return 0; },
                        [](const prop::Neg& n) { return 1 + depth(n.inner); },
                        [](const prop::Claw& c) { return 1 + std::max(depth(c.antecedent), depth(c.consequent)); },
                        [](const auto& b) { return 1 + std::max(depth(b.left), depth(b.right)); },
                    },
                    f.node().value);
}

std::string describe(const Prop& f) {
  return std::visit(overloaded{
                        [](const prop::Var& v) { return "variable " + v.name; },
                        [](const prop::Const& c) { return std::string(c.value ? "verum" : "falsum"); },
                        [](const prop::Neg&) { return std::string("negation"); },
                        [](const prop::Claw&) { return std::string("claw"); },
                        [](const prop::Prod&) { return std::string("product"); },
                        [](const prop::Sum&) { return std::string("sum"); },
                        [](const prop::Conn16& c) { return "connective " + std::to_string(c.index); },
                    },
                    f.node().value);
}

// Relational formulas ----------------------------------------------------

bool operator==(const Rel& a, const Rel& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node().value;
  const auto& vb = b.node().value;
  if (va.index() != vb.index()) return false;
  return std::visit(overloaded{
                        [&](const rel::Atom& x) {
                          const auto& y = std::get<rel::Atom>(vb);
                          return x.predicate == y.predicate && x.indices == y.indices;
                        },
                        [&](const rel::Neg& x) { return x.inner == std::get<rel::Neg>(vb).inner; },
                        [&](const rel::Claw& x) {
                          const auto& y = std::get<rel::Claw>(vb);
                          return x.antecedent == y.antecedent && x.consequent == y.consequent;
                        },
                        [&](const rel::Quant& x) {
                          const auto& y = std::get<rel::Quant>(vb);
                          return x.kind == y.kind && x.var == y.var && x.body == y.body;
                        },
                        [&](const auto& x) {
                          const auto& y = std::get<std::decay_t<decltype(x)>>(vb);
                          return x.left == y.left && x.right == y.right;
                        },
                    },
                    va);
}

namespace rel {

Rel atom(std::string predicate, std::vector<std::string> indices) {
  if (predicate.size() != 1 || !is_ascii_letter(predicate[0]))
    throw std::invalid_argument("predicate name must be a single letter: '" + predicate + "'");
  if (indices.empty()) throw std::invalid_argument("predicate " + predicate + " needs at least one index");
  for (const auto& ix : indices) {
    if (ix.empty() || !std::all_of(ix.begin(), ix.end(), [](char c) { return c >= 'a' && c <= 'z'; }))
      throw std::invalid_argument("index variable must be lowercase letters: '" + ix + "'");
  }
  return make(Atom{std::move(predicate), std::move(indices)});
}
Rel neg(Rel inner) { return make(Neg{std::move(inner)}); }
Rel claw(Rel antecedent, Rel consequent) { return make(Claw{std::move(antecedent), std::move(consequent)}); }
Rel prod(Rel left, Rel right) { return make(Prod{std::move(left), std::move(right)}); }
Rel sum(Rel left, Rel right) { return make(Sum{std::move(left), std::move(right)}); }
Rel quant(QuantKind kind, std::string var, Rel body) {
  if (var.empty() || !std::all_of(var.begin(), var.end(), [](char c) { return c >= 'a' && c <= 'z'; }))
    throw std::invalid_argument("index variable must be lowercase letters: '" + var + "'");
  return make(Quant{kind, std::move(var), std::move(body)});
}
Rel pi(std::string var, Rel body) { return quant(QuantKind::Pi, std::move(var), std::move(body)); }
Rel sigma(std::string var, Rel body) { return quant(QuantKind::Sigma, std::move(var), std::move(body)); }

}  // namespace rel

namespace {

void collect_signature(const Rel& f, std::vector<PredicateSig>& out) {
  std::visit(overloaded{
                 [&](const rel::Atom& a) {
                   int arity = static_cast<int>(a.indices.size());
                   auto it = std::find_if(out.begin(), out.end(),
                                          [&](const PredicateSig& s) { return s.name == a.predicate; });
                   if (it == out.end()) {
                     out.push_back({a.predicate, arity});
                   } else if (it->arity != arity) {
                     throw EvalError("predicate " + a.predicate + " used with arities " + std::to_string(it->arity) +
                                     " and " + std::to_string(arity));
                   }
                 },
                 [&](const rel::Neg& n) { collect_signature(n.inner, out); },
                 [&](const rel::Claw& c) {
                   collect_signature(c.antecedent, out);
                   collect_signature(c.consequent, out);
                 },
                 [&](const rel::Quant& q) { collect_signature(q.body, out); },
                 [&](const auto& b) {
                   collect_signature(b.left, out);
                   collect_signature(b.right, out);
                 },
             },
             f.node().value);
}

// Walks with the stack of binders; `shadowed` is set when a binder re-binds an index already in scope.
void collect_free(const Rel& f, std::vector<std::string>& bound, std::vector<std::string>& out, bool& shadowed) {
  std::visit(overloaded{
                 [&](const rel::Atom& a) {
                   for (const auto& ix : a.indices) {
                     if (std::find(bound.begin(), bound.end(), ix) == bound.end() &&
                         std::find(out.begin(), out.end(), ix) == out.end())
                       out.push_back(ix);
                   }
                 },
                 [&](const rel::Neg& n) { collect_free(n.inner, bound, out, shadowed); },
                 [&](const rel::Claw& c) {
                   collect_free(c.antecedent, bound, out, shadowed);
                   collect_free(c.consequent, bound, out, shadowed);
                 },
                 [&](const rel::Quant& q) {
                   if (std::find(bound.begin(), bound.end(), q.var) != bound.end()) shadowed = true;
                   bound.push_back(q.var);
                   collect_free(q.body, bound, out, shadowed);
                   bound.pop_back();
                 },
                 [&](const auto& b) {
                   collect_free(b.left, bound, out, shadowed);
                   collect_free(b.right, bound, out, shadowed);
                 },
             },
             f.node().value);
}

}  // namespace

std::vector<PredicateSig> signature(const Rel& f) {
  std::vector<PredicateSig> out;
  collect_signature(f, out);
  return out;
}

std::vector<std::string> free_indices(const Rel& f) {
  std::vector<std::string> bound, out;
  bool shadowed = false;
  collect_free(f, bound, out, shadowed);
  return out;
}

bool is_closed(const Rel& f) {
  std::vector<std::string> bound, out;
  bool shadowed = false;
  collect_free(f, bound, out, shadowed);
  return out.empty() && !shadowed;
}

std::size_t depth(const Rel& f) {
  return std::visit(overloaded{
                        [](const rel::Atom&) -> std::size_t { return 0; },
                        [](const rel::Neg& n) { return 1 + depth(n.inner); },
                        [](const rel::Claw& c) { return 1 + std::max(depth(c.antecedent), depth(c.consequent)); },
                        [](const rel::Quant& q) { return 1 + depth(q.body); },
                        [](const auto& b) { return 1 + std::max(depth(b.left), depth(b.right)); },
                    },
                    f.node().value);
}

}  // namespace illation
