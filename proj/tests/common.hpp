#pragma once

// Reference evaluators written independently of the library's evaluators, and
// the exhaustive corpora shared by unit and acceptance tests.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "illation/formula.hpp"
#include "illation/hfset.hpp"
#include "illation/quantifiers.hpp"

namespace oracle {

using illation::Prop;
using illation::Rel;

// The sixteen columns read straight off the printed table: row r, column k.
inline const char* const kConnectiveRows[4] = {
    "FFFFTTTTFFFFTTTT",
    "FFFTFTFFTTFTFTTT",
    "FFTFFFTFTFTTTFTT",
    "FTFFFFFTFTTTTTFT",
};

inline bool conn(int index, bool l, bool r) {
  int row = (l ? 0 : 2) + (r ? 0 : 1);
  return kConnectiveRows[row][index - 1] == 'T';
}

inline bool eval(const Prop& f, const std::map<std::string, bool>& a) {
  namespace p = illation::prop;
  if (auto v = f.as<p::Var>()) return a.at(v->name);
  if (auto c = f.as<p::Const>()) return c->value;
  if (auto n = f.as<p::Neg>()) return !eval(n->inner, a);
  if (auto c = f.as<p::Claw>()) return !eval(c->antecedent, a) || eval(c->consequent, a);
  if (auto b = f.as<p::Prod>()) return eval(b->left, a) && eval(b->right, a);
  if (auto b = f.as<p::Sum>()) return eval(b->left, a) || eval(b->right, a);
  if (auto c = f.as<p::Conn16>()) return conn(c->index, eval(c->left, a), eval(c->right, a));
  throw std::logic_error("unknown node");
}

// Brute force over every assignment to `vars`.
inline bool tautology(const Prop& f, const std::vector<std::string>& vars) {
  const std::size_t n = vars.size();
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    std::map<std::string, bool> a;
    for (std::size_t k = 0; k < n; ++k) a[vars[k]] = (m >> k) & 1U;
    if (!eval(f, a)) return false;
  }
  return true;
}

inline bool rel_eval(const Rel& f, const illation::Structure& s, std::map<std::string, int>& env) {
  namespace r = illation::rel;
  if (auto at = f.as<r::Atom>()) {
    illation::Tuple t;
    for (const auto& ix : at->indices) t.push_back(env.at(ix));
    const auto& rel = s.predicates.at(at->predicate);
    return std::find(rel.tuples.begin(), rel.tuples.end(), t) != rel.tuples.end();
  }
  if (auto n = f.as<r::Neg>()) return !rel_eval(n->inner, s, env);
  if (auto c = f.as<r::Claw>()) return !rel_eval(c->antecedent, s, env) || rel_eval(c->consequent, s, env);
  if (auto b = f.as<r::Prod>()) return rel_eval(b->left, s, env) && rel_eval(b->right, s, env);
  if (auto b = f.as<r::Sum>()) return rel_eval(b->left, s, env) || rel_eval(b->right, s, env);
  if (auto q = f.as<r::Quant>()) {
    auto saved = env.find(q->var) == env.end() ? std::optional<int>{} : std::optional<int>{env[q->var]};
    int hits = 0;
    for (int e = 0; e < s.domain_size; ++e) {
      env[q->var] = e;
      hits += rel_eval(q->body, s, env) ? 1 : 0;
    }
    if (saved)
      env[q->var] = *saved;
    else
      env.erase(q->var);
    return q->kind == illation::QuantKind::Pi ? hits == s.domain_size : hits > 0;
  }
  throw std::logic_error("unknown node");
}

inline bool rel_eval(const Rel& f, const illation::Structure& s) {
  std::map<std::string, int> env;
  return rel_eval(f, s, env);
}

// Canonical text of a hereditarily finite set: elements sorted and deduplicated recursively.
inline std::string canon(const illation::HFSet& x) {
  if (x.is_atom()) return x.name();
  std::vector<std::string> parts;
  for (const auto& e : x.elements()) parts.push_back(canon(e));
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + "}";
}

}  // namespace oracle

namespace corpus {

using illation::Prop;
using illation::Rel;

// Every formula over {a, b} built from negation, claw, product and sum, of depth at most 2 (786 of them).
inline std::vector<Prop> props_depth2() {
  namespace p = illation::prop;
  std::vector<Prop> level = {p::var("a"), p::var("b")};
  for (int d = 0; d < 2; ++d) {
    std::vector<Prop> next = {p::var("a"), p::var("b")};
    for (const auto& x : level) next.push_back(p::neg(x));
    for (const auto& x : level)
      for (const auto& y : level) {
        next.push_back(p::claw(x, y));
        next.push_back(p::prod(x, y));
        next.push_back(p::sum(x, y));
      }
    level = std::move(next);
  }
  return level;
}

// All 1,854,176 formulas of depth at most 3 on the same basis, streamed.
inline std::size_t for_each_prop_depth3(const std::function<void(const Prop&)>& visit) {
  namespace p = illation::prop;
  const auto base = props_depth2();
  std::size_t count = 0;
  auto emit = [&](const Prop& f) {
    ++count;
    visit(f);
  };
  emit(p::var("a"));
  emit(p::var("b"));
  for (const auto& x : base) emit(p::neg(x));
  for (const auto& x : base)
    for (const auto& y : base) {
      emit(p::claw(x, y));
      emit(p::prod(x, y));
      emit(p::sum(x, y));
    }
  return count;
}

namespace detail {

inline std::vector<Rel> rel_level(int depth, const std::vector<std::string>& bound) {
  namespace r = illation::rel;
  std::vector<Rel> out;
  for (const auto& x : bound) out.push_back(r::atom("p", {x}));
  for (const auto& x : bound)
    for (const auto& y : bound) out.push_back(r::atom("l", {x, y}));
  if (depth == 0) return out;
  const auto sub = rel_level(depth - 1, bound);
  for (const auto& x : sub) out.push_back(r::neg(x));
  for (const auto& x : sub)
    for (const auto& y : sub) {
      out.push_back(r::claw(x, y));
      out.push_back(r::prod(x, y));
      out.push_back(r::sum(x, y));
    }
  if (bound.size() < 2) {
    std::string v = bound.empty() ? "i" : "j";
    auto inner = bound;
    inner.push_back(v);
    for (const auto& body : rel_level(depth - 1, inner)) {
      out.push_back(r::pi(v, body));
      out.push_back(r::sigma(v, body));
    }
  }
  return out;
}

}  // namespace detail

// Closed formulas of depth at most 3 over a unary p and a binary l, binding i then j, never shadowing.
inline std::vector<Rel> closed_rels_depth3() { return detail::rel_level(3, {}); }

// Every interpretation of p (unary) and l (binary) over a domain of size n.
inline std::vector<illation::Structure> structures(int n, const std::vector<illation::PredicateSig>& sig) {
  std::vector<std::pair<std::string, std::vector<illation::Tuple>>> cells;
  std::size_t total = 0;
  for (const auto& p : sig) {
    std::vector<illation::Tuple> ts;
    illation::Tuple t(p.arity, 0);
    while (true) {
      ts.push_back(t);
      int k = p.arity - 1;
      while (k >= 0 && ++t[k] == n) t[k--] = 0;
      if (k < 0) break;
    }
    total += ts.size();
    cells.emplace_back(p.name, std::move(ts));
  }
  std::vector<illation::Structure> out;
  for (std::size_t m = 0; m < (std::size_t{1} << total); ++m) {
    illation::Structure s;
    s.domain_size = n;
    std::size_t bit = 0;
    for (const auto& [name, ts] : cells) {
      illation::Relation r{static_cast<int>(ts.front().size()), {}};
      for (const auto& t : ts)
        if ((m >> bit++) & 1U) r.tuples.insert(t);
      s.predicates[name] = std::move(r);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline const std::vector<illation::PredicateSig>& pl_signature() {
  static const std::vector<illation::PredicateSig> sig = {{"p", 1}, {"l", 2}};
  return sig;
}

}  // namespace corpus
