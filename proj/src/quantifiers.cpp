#include "illation/quantifiers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include <json.hpp>

#include "illation/detail/overloaded.hpp"
#include "illation/errors.hpp"
#include "illation/truth.hpp"

namespace illation {

namespace {

using detail::overloaded;
using Env = std::vector<std::pair<std::string, int>>;

constexpr std::size_t kMaxGroundNodes = std::size_t{1} << 22;

int lookup(const Env& env, const std::string& var) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == var) return it->second;
  throw EvalError("unbound index variable " + var);
}

Tuple ground_tuple(const rel::Atom& a, const Env& env) {
  Tuple t;
  t.reserve(a.indices.size());
  for (const auto& ix : a.indices) t.push_back(lookup(env, ix));
  return t;
}

// All tuples of a given arity over 0..n-1, in lexicographic order.
std::vector<Tuple> all_tuples(int n, int arity) {
  std::vector<Tuple> out;
  Tuple t(arity, 0);
  while (true) {
    out.push_back(t);
    int k = arity - 1;
    while (k >= 0 && ++t[k] == n) t[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::size_t cell_count(const std::vector<PredicateSig>& sig, int n, std::size_t cap) {
  std::size_t total = 0;
  for (const auto& p : sig) {
    std::size_t cells = 1;
    for (int k = 0; k < p.arity; ++k) {
      cells *= static_cast<std::size_t>(n);
      if (cells > cap) return cap + 1;
    }
    total += cells;
    if (total > cap) return cap + 1;
  }
  return total;
}

void require_closed(const Rel& f) {
  auto free = free_indices(f);
  if (!free.empty()) throw EvalError("unbound index variable " + free.front());
  if (!is_closed(f)) throw EvalError("an index variable is bound twice on one path");
}

bool eval_env(const Rel& f, const Structure& s, Env& env) {
  return std::visit(
      overloaded{
          [&](const rel::Atom& a) {
            auto it = s.predicates.find(a.predicate);
            if (it == s.predicates.end()) throw EvalError("structure does not interpret predicate " + a.predicate);
            if (it->second.arity != static_cast<int>(a.indices.size()))
              throw EvalError("predicate " + a.predicate + " has arity " + std::to_string(it->second.arity) +
                              " in the structure but is used with " + std::to_string(a.indices.size()));
            return it->second.tuples.count(ground_tuple(a, env)) > 0;
          },
          [&](const rel::Neg& n) { return !eval_env(n.inner, s, env); },
          [&](const rel::Claw& c) { return !eval_env(c.antecedent, s, env) || eval_env(c.consequent, s, env); },
          [&](const rel::Prod& b) { return eval_env(b.left, s, env) && eval_env(b.right, s, env); },
          [&](const rel::Sum& b) { return eval_env(b.left, s, env) || eval_env(b.right, s, env); },
          [&](const rel::Quant& q) {
            bool universal = q.kind == QuantKind::Pi;
            env.emplace_back(q.var, 0);
            bool result = universal;
            for (int e = 0; e < s.domain_size; ++e) {
              env.back().second = e;
              bool v = eval_env(q.body, s, env);
              if (universal && !v) {
                result = false;
                break;
              }
              if (!universal && v) {
                result = true;
                break;
              }
            }
            env.pop_back();
            return result;
          },
      },
      f.node().value);
}

Prop expand_env(const Rel& f, int n, Env& env, std::size_t& nodes) {
  if (++nodes > kMaxGroundNodes) throw LimitError("expansion is too large", n);
  return std::visit(overloaded{
                        [&](const rel::Atom& a) { return prop::var(atom_name(a.predicate, ground_tuple(a, env))); },
                        [&](const rel::Neg& x) { return prop::neg(expand_env(x.inner, n, env, nodes)); },
                        [&](const rel::Claw& c) {
                          Prop a = expand_env(c.antecedent, n, env, nodes);
                          return prop::claw(a, expand_env(c.consequent, n, env, nodes));
                        },
                        [&](const rel::Prod& b) {
                          Prop l = expand_env(b.left, n, env, nodes);
                          return prop::prod(l, expand_env(b.right, n, env, nodes));
                        },
                        [&](const rel::Sum& b) {
                          Prop l = expand_env(b.left, n, env, nodes);
                          return prop::sum(l, expand_env(b.right, n, env, nodes));
                        },
                        [&](const rel::Quant& q) {
                          env.emplace_back(q.var, 0);
                          std::optional<Prop> acc;
                          for (int e = 0; e < n; ++e) {
                            env.back().second = e;
                            Prop term = expand_env(q.body, n, env, nodes);
                            if (!acc)
                              acc = term;
                            else
                              acc = q.kind == QuantKind::Pi ? prop::prod(*acc, term) : prop::sum(*acc, term);
                          }
                          env.pop_back();
                          return *acc;
                        },
                    },
                    f.node().value);
}

// Ground formula over cells, evaluated 64 interpretations at a time.
class Ground {
 public:
  enum class Op : std::uint8_t { Cell, Neg, Claw, Prod, Sum };
  struct Node {
    Op op;
    int a;
    int b;
  };

  Ground(const Rel& f, int n, const std::vector<PredicateSig>& sig) : n_(n) {
    int next = 0;
    for (const auto& p : sig) {
      offset_.emplace_back(p.name, next);
      int cells = 1;
      for (int k = 0; k < p.arity; ++k) cells *= n;
      next += cells;
    }
    cells_ = next;
    Env env;
    build(f, env);
  }

  int cells() const { return cells_; }

  // Bit t of the result is the formula's value at interpretation `base + t`,
  // where cell k is present iff bit (cells-1-k) of the interpretation number is set.
  std::uint64_t eval_block(std::uint64_t base) {
    scratch_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& nd = nodes_[i];
      std::uint64_t w = 0;
      switch (nd.op) {
        case Op::Cell: w = cell_word(nd.a, base); break;
        case Op::Neg: w = ~scratch_[nd.a]; break;
        case Op::Claw: w = ~scratch_[nd.a] | scratch_[nd.b]; break;
        case Op::Prod: w = scratch_[nd.a] & scratch_[nd.b]; break;
        case Op::Sum: w = scratch_[nd.a] | scratch_[nd.b]; break;
      }
      scratch_[i] = w;
    }
    return scratch_.back();
  }

 private:
  std::uint64_t cell_word(int cell, std::uint64_t base) const {
    static constexpr std::uint64_t kPatterns[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
    };
    int bit = cells_ - 1 - cell;
    if (bit < 6) return kPatterns[bit];
    return ((base >> bit) & 1U) ? ~std::uint64_t{0} : 0;
  }

  int cell_of(const rel::Atom& a, const Env& env) const {
    int base = -1;
    for (const auto& [name, off] : offset_)
      if (name == a.predicate) base = off;
    int idx = 0;
    for (const auto& ix : a.indices) idx = idx * n_ + lookup(env, ix);
    return base + idx;
  }

  int push(Op op, int a, int b = -1) {
    if (nodes_.size() >= kMaxGroundNodes) throw LimitError("ground formula is too large", n_);
    nodes_.push_back({op, a, b});
    return static_cast<int>(nodes_.size()) - 1;
  }

  int build(const Rel& f, Env& env) {
    return std::visit(overloaded{
                          [&](const rel::Atom& a) { return push(Op::Cell, cell_of(a, env)); },
                          [&](const rel::Neg& x) { return push(Op::Neg, build(x.inner, env)); },
                          [&](const rel::Claw& c) {
                            int a = build(c.antecedent, env);
                            return push(Op::Claw, a, build(c.consequent, env));
                          },
                          [&](const rel::Prod& b) {
                            int l = build(b.left, env);
                            return push(Op::Prod, l, build(b.right, env));
                          },
                          [&](const rel::Sum& b) {
                            int l = build(b.left, env);
                            return push(Op::Sum, l, build(b.right, env));
                          },
                          [&](const rel::Quant& q) {
                            env.emplace_back(q.var, 0);
                            int acc = -1;
                            for (int e = 0; e < n_; ++e) {
                              env.back().second = e;
                              int term = build(q.body, env);
                              acc = acc < 0 ? term : push(q.kind == QuantKind::Pi ? Op::Prod : Op::Sum, acc, term);
                            }
                            env.pop_back();
                            return acc;
                          },
                      },
                      f.node().value);
  }

  int n_;
  int cells_ = 0;
  std::vector<std::pair<std::string, int>> offset_;
  std::vector<Node> nodes_;
  std::vector<std::uint64_t> scratch_;
};

Structure decode(std::uint64_t interpretation, int n, int cells, const std::vector<PredicateSig>& sig) {
  Structure s;
  s.domain_size = n;
  int cell = 0;
  for (const auto& p : sig) {
    Relation r{p.arity, {}};
    for (auto& t : all_tuples(n, p.arity)) {
      if ((interpretation >> (cells - 1 - cell)) & 1U) r.tuples.insert(t);
      ++cell;
    }
    s.predicates[p.name] = std::move(r);
  }
  return s;
}

}  // namespace

bool Structure::holds(const std::string& predicate, const Tuple& t) const {
  auto it = predicates.find(predicate);
  return it != predicates.end() && it->second.tuples.count(t) > 0;
}

void Structure::validate() const {
  if (domain_size < 1) throw FormatError("domain size must be at least 1");
  for (const auto& [name, rel] : predicates) {
    if (rel.arity < 1) throw FormatError("predicate " + name + " must have positive arity");
    for (const auto& t : rel.tuples) {
      if (static_cast<int>(t.size()) != rel.arity)
        throw FormatError("predicate " + name + " has a tuple of length " + std::to_string(t.size()));
      for (int e : t)
        if (e < 0 || e >= domain_size)
          throw FormatError("predicate " + name + " mentions element " + std::to_string(e) + " outside the domain");
    }
  }
}

std::string structure_to_json(const Structure& s) {
  nlohmann::json preds = nlohmann::json::object();
  for (const auto& [name, rel] : s.predicates) {
    nlohmann::json tuples = nlohmann::json::array();
    for (const auto& t : rel.tuples) tuples.push_back(t);
    preds[name] = {{"arity", rel.arity}, {"true", tuples}};
  }
  nlohmann::json j = {{"domain", s.domain_size}, {"predicates", preds}};
  return j.dump() + "\n";
}

Structure structure_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("structure JSON: ") + e.what());
  }
  try {
    Structure s;
    s.domain_size = j.at("domain").get<int>();
    if (j.contains("predicates")) {
      for (const auto& [name, entry] : j.at("predicates").items()) {
        if (name.size() != 1) throw FormatError("predicate names are single letters: '" + name + "'");
        Relation r;
        r.arity = entry.at("arity").get<int>();
        for (const auto& t : entry.at("true")) r.tuples.insert(t.get<Tuple>());
        s.predicates[name] = std::move(r);
      }
    }
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("structure JSON: ") + e.what());
  }
}

std::string atom_name(const std::string& predicate, const Tuple& elements) {
  std::string out = predicate;
  for (int e : elements) out += "_" + std::to_string(e);
  return out;
}

Prop expand(const Rel& f, int domain_size, std::size_t max_atoms) {
  if (domain_size < 1) throw std::invalid_argument("domain size must be at least 1");
  require_closed(f);
  auto sig = signature(f);
  if (cell_count(sig, domain_size, max_atoms) > max_atoms)
    throw LimitError("expansion over " + std::to_string(domain_size) + " elements exceeds " +
                         std::to_string(max_atoms) + " atoms",
                     domain_size);
  Env env;
  std::size_t nodes = 0;
  return expand_env(f, domain_size, env, nodes);
}

Assignment atom_assignment(const Structure& s) {
  Assignment a;
  for (const auto& [name, rel] : s.predicates)
    for (const auto& t : all_tuples(s.domain_size, rel.arity)) a[atom_name(name, t)] = rel.tuples.count(t) > 0;
  return a;
}

bool eval_in(const Rel& f, const Structure& s) {
  require_closed(f);
  Env env;
  return eval_env(f, s, env);
}

std::optional<Structure> sat_search(const Rel& f, int domain_size, std::size_t max_cells) {
  if (domain_size < 1) throw std::invalid_argument("domain size must be at least 1");
  require_closed(f);
  auto sig = signature(f);
  std::size_t cells = cell_count(sig, domain_size, max_cells);
  if (cells > max_cells || cells > 62)
    throw LimitError("interpretation space over " + std::to_string(domain_size) + " elements exceeds " +
                         std::to_string(max_cells) + " cells",
                     domain_size);
  Ground g(f, domain_size, sig);
  const std::uint64_t total = std::uint64_t{1} << cells;
  for (std::uint64_t base = 0; base < total; base += 64) {
    std::uint64_t word = g.eval_block(base);
    if (total - base < 64) word &= (std::uint64_t{1} << (total - base)) - 1;
    if (word) {
      std::uint64_t hit = base + static_cast<std::uint64_t>(std::countr_zero(word));
      Structure s = decode(hit, domain_size, static_cast<int>(cells), sig);
      if (!eval_in(f, s)) throw std::logic_error("ground evaluation disagrees with eval_in");
      return s;
    }
  }
  return std::nullopt;
}

Structure extend_model(const Rel& f, const Structure& s) {
  s.validate();
  if (!eval_in(f, s)) throw std::invalid_argument("extend_model needs a structure that satisfies the formula");
  const int fresh = s.domain_size;
  Structure out = s;
  out.domain_size = fresh + 1;
  for (auto& [name, rel] : out.predicates) {
    std::set<Tuple> added;
    for (const auto& t : rel.tuples) {
      std::vector<int> zeros;
      for (int k = 0; k < static_cast<int>(t.size()); ++k)
        if (t[k] == 0) zeros.push_back(k);
      const unsigned combos = 1U << zeros.size();
      for (unsigned m = 1; m < combos; ++m) {
        Tuple copy = t;
        for (std::size_t z = 0; z < zeros.size(); ++z)
          if (m & (1U << z)) copy[zeros[z]] = fresh;
        added.insert(std::move(copy));
      }
    }
    rel.tuples.insert(added.begin(), added.end());
  }
  if (!eval_in(f, out))
    throw std::logic_error("duplicated-element extension of a model failed to satisfy the formula");
  return out;
}

SatScanReport sat_scan(const Rel& f, int max_size, std::size_t max_cells) {
  SatScanReport report{f, {}};
  for (int k = 1; k <= max_size; ++k) {
    SizeVerdict v{k, sat_search(f, k, max_cells), std::nullopt};
    if (v.witness) v.extension = extend_model(f, *v.witness);
    report.sizes.push_back(std::move(v));
  }
  return report;
}

HerbrandResult herbrand_scan(const Rel& f, int max_size, std::size_t max_atoms) {
  for (int k = 1; k <= max_size; ++k) {
    Prop e = expand(f, k, max_atoms);
    if (free_vars(e).size() > kMaxTableVars)
      throw LimitError("expansion at size " + std::to_string(k) + " has more than " + std::to_string(kMaxTableVars) +
                           " atoms to tabulate",
                       k);
    if (is_tautology(e).holds()) return {k, e};
  }
  return {};
}

Rel mitchell(MitchellKind kind, const std::string& predicate) {
  Rel body = rel::atom(predicate, {"i"});
  return kind == MitchellKind::All ? rel::pi("i", body) : rel::sigma("i", body);
}

Rel aeio(Categorical form, const std::string& subject, const std::string& predicate) {
  Rel s = rel::atom(subject, {"i"});
  Rel p = rel::atom(predicate, {"i"});
  switch (form) {
    case Categorical::A: return rel::pi("i", rel::claw(s, p));
    case Categorical::E: return rel::pi("i", rel::claw(s, rel::neg(p)));
    case Categorical::I: return rel::sigma("i", rel::prod(s, p));
    case Categorical::O: return rel::sigma("i", rel::prod(s, rel::neg(p)));
  }
  throw std::logic_error("unknown categorical form");
}

bool indiscernible(const Structure& s, int i, int j) {
  if (i < 0 || j < 0 || i >= s.domain_size || j >= s.domain_size)
    throw std::invalid_argument("element outside the domain");
  for (const auto& [name, rel] : s.predicates) {
    for (const auto& t : all_tuples(s.domain_size, rel.arity)) {
      for (int pos = 0; pos < rel.arity; ++pos) {
        Tuple ti = t, tj = t;
        ti[pos] = i;
        tj[pos] = j;
        if ((rel.tuples.count(ti) > 0) != (rel.tuples.count(tj) > 0)) return false;
      }
    }
  }
  return true;
}

}  // namespace illation
