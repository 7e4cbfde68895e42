#include "illation/truth.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "illation/detail/overloaded.hpp"
#include "illation/errors.hpp"

namespace illation {

namespace {

using detail::overloaded;

// Columns 1..16 as printed in the 1902 table, one string per row (v,v), (v,f), (f,v), (f,f).
constexpr std::array<std::string_view, 4> kColumnRows = {
    "FFFFTTTTFFFFTTTT",
    "FFFTFTFFTTFTFTTT",
    "FFTFFFTFTFTTTFTT",
    "FTFFFFFTFTTTTTFT",
};

int row_of(bool left, bool right) { return (left ? 0 : 2) + (right ? 0 : 1); }

// Postorder flattening: children precede parents, so one forward pass evaluates the tree.
struct Flat {
  enum class Op : std::uint8_t { Var, Const, Neg, Claw, Prod, Sum, Conn };
  struct Node {
    Op op;
    int a = -1;
    int b = -1;
    int extra = 0;  // variable slot, constant value, or connective index
  };
  std::vector<Node> nodes;
  std::vector<std::string> variables;

  static Flat build(const Prop& f, const std::vector<std::string>& variables) {
    Flat out;
    out.variables = variables;
    out.add(f);
    return out;
  }

  int slot(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw EvalError("no value for variable " + name);
    return static_cast<int>(it - variables.begin());
  }

  int add(const Prop& f) {
    Node n = std::visit(overloaded{
                            [&](const prop::Var& v) { return Node{Op::Var, -1, -1, slot(v.name)}; },
                            [&](const prop::Const& c) { return Node{Op::Const, -1, -1, c.value ? 1 : 0}; },
                            [&](const prop::Neg& x) { return Node{Op::Neg, add(x.inner), -1, 0}; },
                            [&](const prop::Claw& x) {
                              int a = add(x.antecedent);
                              return Node{Op::Claw, a, add(x.consequent), 0};
                            },
                            [&](const prop::Prod& x) {
                              int a = add(x.left);
                              return Node{Op::Prod, a, add(x.right), 0};
                            },
                            [&](const prop::Sum& x) {
                              int a = add(x.left);
                              return Node{Op::Sum, a, add(x.right), 0};
                            },
                            [&](const prop::Conn16& x) {
                              int a = add(x.left);
                              return Node{Op::Conn, a, add(x.right), x.index};
                            },
                        },
                        f.node().value);
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  int root() const { return static_cast<int>(nodes.size()) - 1; }

  bool eval(const std::vector<bool>& inputs, std::vector<char>& scratch) const {
    scratch.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      bool r = false;
      switch (n.op) {
        case Op::Var: r = inputs[n.extra]; break;
        case Op::Const: r = n.extra != 0; break;
        case Op::Neg: r = !scratch[n.a]; break;
        case Op::Claw: r = !scratch[n.a] || scratch[n.b]; break;
        case Op::Prod: r = scratch[n.a] && scratch[n.b]; break;
        case Op::Sum: r = scratch[n.a] || scratch[n.b]; break;
        case Op::Conn: r = connective_vector(n.extra)[row_of(scratch[n.a], scratch[n.b])]; break;
      }
      scratch[i] = r;
    }
    return scratch.back();
  }
};

std::vector<bool> row_inputs(std::size_t row, std::size_t nvars) {
  std::vector<bool> in(nvars);
  for (std::size_t k = 0; k < nvars; ++k) in[k] = ((row >> (nvars - 1 - k)) & 1U) == 0;
  return in;
}

std::vector<std::string> union_vars(const Prop& f, const Prop& g) {
  auto vars = free_vars(f);
  for (auto& v : free_vars(g))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(std::move(v));
  return vars;
}

}  // namespace

bool eval2(const Prop& f, const Assignment& a) {
  return std::visit(overloaded{
                        [&](const prop::Var& v) {
                          auto it = a.find(v.name);
                          if (it == a.end()) throw EvalError("no value for variable " + v.name);
                          return it->second;
                        },
                        [](const prop::Const& c) { return c.value; },
                        [&](const prop::Neg& n) { return !eval2(n.inner, a); },
                        [&](const prop::Claw& c) { return !eval2(c.antecedent, a) || eval2(c.consequent, a); },
                        [&](const prop::Prod& b) { return eval2(b.left, a) && eval2(b.right, a); },
                        [&](const prop::Sum& b) { return eval2(b.left, a) || eval2(b.right, a); },
                        [&](const prop::Conn16& c) {
                          return connective_vector(c.index)[row_of(eval2(c.left, a), eval2(c.right, a))];
                        },
                    },
                    f.node().value);
}

Assignment TruthTable::assignment(std::size_t row) const {
  Assignment a;
  for (std::size_t k = 0; k < variables.size(); ++k) a[variables[k]] = rows.at(row).inputs[k];
  return a;
}

TruthTable truth_table(const Prop& f) { return truth_table(f, free_vars(f)); }

TruthTable truth_table(const Prop& f, const std::vector<std::string>& variables) {
  if (variables.size() > kMaxTableVars)
    throw LimitError("truth table needs " + std::to_string(variables.size()) + " variables; the limit is " +
                     std::to_string(kMaxTableVars));
  Flat flat = Flat::build(f, variables);
  TruthTable t;
  t.variables = variables;
  const std::size_t count = std::size_t{1} << variables.size();
  t.rows.reserve(count);
  std::vector<char> scratch;
  for (std::size_t r = 0; r < count; ++r) {
    auto in = row_inputs(r, variables.size());
    bool v = flat.eval(in, scratch);
    t.rows.push_back({std::move(in), v});
  }
  return t;
}

std::string to_tsv(const TruthTable& table, std::string_view value_label) {
  std::ostringstream out;
  for (const auto& v : table.variables) out << v << '\t';
  out << value_label << '\n';
  for (const auto& row : table.rows) {
    for (bool b : row.inputs) out << (b ? 'v' : 'f') << '\t';
    out << (row.value ? 'v' : 'f') << '\n';
  }
  return out.str();
}

TautologyResult is_tautology(const Prop& f) {
  TruthTable t = truth_table(f);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (!t.rows[r].value) return {t.assignment(r)};
  return {};
}

// Indirect method --------------------------------------------------------

namespace {

constexpr std::size_t kMaxIndirectStates = std::size_t{1} << 22;

struct Goal {
  int node;
  bool value;
};

struct SearchState {
  std::vector<signed char> values;  // -1 unknown, 0 f, 1 v
  std::deque<Goal> goals;
  int branch;
};

// Alternatives for a goal; a single alternative means the goal is forced.
std::vector<std::vector<Goal>> alternatives(const Flat& flat, const Goal& g) {
  using Op = Flat::Op;
  const auto& n = flat.nodes[g.node];
  switch (n.op) {
    case Op::Var:
    case Op::Const: return {{g}};
    case Op::Neg: return {{{n.a, !g.value}}};
    case Op::Claw:
      if (!g.value) return {{{n.a, true}, {n.b, false}}};
      return {{{n.a, false}}, {{n.a, true}, {n.b, true}}};
    case Op::Prod:
      if (g.value) return {{{n.a, true}, {n.b, true}}};
      return {{{n.a, false}}, {{n.a, true}, {n.b, false}}};
    case Op::Sum:
      if (!g.value) return {{{n.a, false}, {n.b, false}}};
      return {{{n.a, true}}, {{n.a, false}, {n.b, true}}};
    case Op::Conn: {
      std::vector<std::vector<Goal>> alts;
      auto vec = connective_vector(n.extra);
      for (int l = 1; l >= 0; --l)
        for (int r = 1; r >= 0; --r)
          if (vec[row_of(l != 0, r != 0)] == g.value) alts.push_back({{n.a, l != 0}, {n.b, r != 0}});
      return alts;
    }
  }
  return {};
}

bool is_forced(const Flat& flat, const Goal& g) {
  using Op = Flat::Op;
  const auto& n = flat.nodes[g.node];
  switch (n.op) {
    case Op::Var:
    case Op::Const:
    case Op::Neg: return true;
    case Op::Claw: return !g.value;
    case Op::Prod: return g.value;
    case Op::Sum: return !g.value;
    case Op::Conn: return alternatives(flat, g).size() <= 1;
  }
  return false;
}

bool completion_less(const std::vector<bool>& a, const std::vector<bool>& b) {
  // v sorts before f
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i];
  return false;
}

}  // namespace

IndirectResult indirect_falsify(const Prop& f) {
  auto vars = free_vars(f);
  if (vars.size() > kMaxTableVars)
    throw LimitError("indirect table needs " + std::to_string(vars.size()) + " variables; the limit is " +
                     std::to_string(kMaxTableVars));
  Flat flat = Flat::build(f, vars);
  IndirectResult result{true, {}, {-1}, std::nullopt};

  std::deque<SearchState> queue;
  queue.push_back({std::vector<signed char>(vars.size(), -1), {{flat.root(), false}}, 0});
  std::optional<std::vector<bool>> best;
  std::size_t expanded = 0;

  while (!queue.empty()) {
    SearchState st = std::move(queue.front());
    queue.pop_front();
    if (++expanded > kMaxIndirectStates) throw LimitError("indirect table search exceeded its state budget");
    bool closed = false;
    bool branched = false;
    while (!st.goals.empty() && !closed) {
      auto it = std::find_if(st.goals.begin(), st.goals.end(), [&](const Goal& g) { return is_forced(flat, g); });
      if (it == st.goals.end()) {
        Goal g = st.goals.front();
        st.goals.pop_front();
        for (auto& alt : alternatives(flat, g)) {
          SearchState child{st.values, st.goals, static_cast<int>(result.parent.size())};
          result.parent.push_back(st.branch);
          for (const auto& sub : alt) child.goals.push_back(sub);
          queue.push_back(std::move(child));
        }
        branched = true;
        break;
      }
      Goal g = *it;
      st.goals.erase(it);
      const auto& n = flat.nodes[g.node];
      if (n.op == Flat::Op::Var) {
        auto& slot = st.values[n.extra];
        signed char want = g.value ? 1 : 0;
        if (slot < 0) {
          slot = want;
          result.trace.push_back({st.branch, vars[n.extra], g.value, false});
        } else if (slot != want) {
          result.trace.push_back({st.branch, vars[n.extra], g.value, true});
          closed = true;
        }
      } else if (n.op == Flat::Op::Const) {
        if ((n.extra != 0) != g.value) {
          result.trace.push_back({st.branch, n.extra != 0 ? "#t" : "#f", g.value, true});
          closed = true;
        }
      } else {
        auto alts = alternatives(flat, g);
        if (alts.empty()) {
          result.trace.push_back({st.branch, "connective " + std::to_string(n.extra), g.value, true});
          closed = true;
        } else {
          for (const auto& sub : alts.front()) st.goals.push_back(sub);
        }
      }
    }
    if (closed || branched) continue;
    std::vector<bool> completion(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) completion[k] = st.values[k] != 0;
    if (!best || completion_less(completion, *best)) best = std::move(completion);
  }

  if (best) {
    result.tautology = false;
    Assignment cx;
    for (std::size_t k = 0; k < vars.size(); ++k) cx[vars[k]] = (*best)[k];
    if (eval2(f, cx)) throw std::logic_error("indirect method produced a non-falsifying assignment");
    result.counterexample = std::move(cx);
  }
  return result;
}

// Connectives ------------------------------------------------------------

TruthVector connective_vector(int index) {
  if (index < 1 || index > 16) throw std::invalid_argument("connective index must be in 1..16");
  TruthVector v{};
  for (std::size_t r = 0; r < 4; ++r) v[r] = kColumnRows[r][index - 1] == 'T';
  return v;
}

int connective_index(const TruthVector& v) {
  for (int i = 1; i <= 16; ++i)
    if (connective_vector(i) == v) return i;
  throw std::logic_error("connective table is not a bijection");
}

Prop connective_expansion(int index, const Prop& left, const Prop& right) {
  auto vec = connective_vector(index);
  std::optional<Prop> out;
  for (int row = 0; row < 4; ++row) {
    if (!vec[row]) continue;
    Prop l = row < 2 ? left : prop::neg(left);
    Prop r = row % 2 == 0 ? right : prop::neg(right);
    Prop term = prop::prod(l, r);
    out = out ? prop::sum(*out, term) : term;
  }
  return out ? *out : prop::prod(left, prop::neg(left));
}

std::array<std::string, 3> xframe(int index) {
  auto vec = connective_vector(index);
  auto mark = [&](int row, char stroke) { return vec[row] ? ' ' : stroke; };
  return {
      std::string{mark(0, '\\'), '|', mark(1, '/')},
      std::string{"-+-"},
      std::string{mark(2, '/'), '|', mark(3, '\\')},
  };
}

std::string connective_table_text() {
  std::ostringstream out;
  for (int i = 1; i <= 16; ++i) out << (i > 1 ? "\t" : "") << i;
  out << '\n';
  for (int r = 0; r < 4; ++r) {
    for (int i = 1; i <= 16; ++i) out << (i > 1 ? "\t" : "") << (connective_vector(i)[r] ? 'T' : 'F');
    out << '\n';
  }
  return out.str();
}

// Algebraic normal form --------------------------------------------------

bool AnfPoly::evaluate(const Assignment& a) const {
  bool acc = false;
  for (const auto& m : monomials) {
    bool term = true;
    for (const auto& v : m) {
      auto it = a.find(v);
      if (it == a.end()) throw EvalError("no value for variable " + v);
      term = term && it->second;
    }
    acc = acc != term;
  }
  return acc;
}

std::string AnfPoly::to_string() const {
  if (monomials.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i) out += " ^ ";
    if (monomials[i].empty()) {
      out += "1";
      continue;
    }
    for (std::size_t k = 0; k < monomials[i].size(); ++k) {
      if (k) out += "*";
      out += monomials[i][k];
    }
  }
  return out;
}

AnfPoly anf(const Prop& f) {
  TruthTable t = truth_table(f);
  const std::size_t n = t.variables.size();
  const std::size_t count = std::size_t{1} << n;
  // coeff[mask]: bit k set means variable k is true
  std::vector<std::uint8_t> coeff(count);
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t mask = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (t.rows[r].inputs[k]) mask |= std::size_t{1} << k;
    coeff[mask] = t.rows[r].value ? 1 : 0;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < count; ++m)
      if (m & (std::size_t{1} << k)) coeff[m] ^= coeff[m ^ (std::size_t{1} << k)];

  std::vector<std::vector<std::size_t>> picked;
  for (std::size_t m = 0; m < count; ++m) {
    if (!coeff[m]) continue;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (m & (std::size_t{1} << k)) idx.push_back(k);
    picked.push_back(std::move(idx));
  }
  std::sort(picked.begin(), picked.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  AnfPoly poly;
  poly.variables = t.variables;
  for (const auto& idx : picked) {
    AnfPoly::Monomial m;
    for (auto k : idx) m.push_back(t.variables[k]);
    poly.monomials.push_back(std::move(m));
  }
  return poly;
}

// Semantic equality ------------------------------------------------------

std::optional<Assignment> semantic_difference(const Prop& f, const Prop& g) {
  auto vars = union_vars(f, g);
  TruthTable tf = truth_table(f, vars);
  TruthTable tg = truth_table(g, vars);
  for (std::size_t r = 0; r < tf.rows.size(); ++r)
    if (tf.rows[r].value != tg.rows[r].value) return tf.assignment(r);
  return std::nullopt;
}

CongruenceVerdict congruence_check(const Prop& s, const Prop& t, const Prop& context, std::string_view hole) {
  if (!occurs(context, hole))
    throw std::invalid_argument("hole variable " + std::string(hole) + " does not occur in the context");
  Prop ps = substitute(context, hole, s);
  Prop pt = substitute(context, hole, t);
  auto premise_vars = union_vars(s, t);
  auto plugged_vars = union_vars(ps, pt);
  auto premise_witness = semantic_difference(s, t);
  auto context_witness = semantic_difference(ps, pt);
  return CongruenceVerdict{
      !premise_witness.has_value(),
      !context_witness.has_value(),
      ps,
      pt,
      truth_table(s, premise_vars),
      truth_table(t, premise_vars),
      truth_table(ps, plugged_vars),
      truth_table(pt, plugged_vars),
      std::move(premise_witness),
      std::move(context_witness),
  };
}

std::string format_assignment(const Assignment& a, const std::vector<std::string>& order) {
  std::string out;
  for (const auto& v : order) {
    auto it = a.find(v);
    if (it == a.end()) continue;
    if (!out.empty()) out += ' ';
    out += v + "=" + (it->second ? "v" : "f");
  }
  return out;
}

}  // namespace illation
