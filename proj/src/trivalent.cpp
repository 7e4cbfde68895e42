#include "illation/trivalent.hpp"

#include <sstream>

#include "illation/detail/overloaded.hpp"
#include "illation/errors.hpp"
#include "illation/truth.hpp"

namespace illation {

namespace {

using detail::overloaded;

constexpr std::size_t kMaxTriVars = 10;

int slot(TriValue v) { return static_cast<int>(v); }

// Rows and columns in the order V, L, F, as laid out in the notebook.
constexpr TriValue kOr[3][3] = {
    {TriValue::V, TriValue::V, TriValue::V},
    {TriValue::V, TriValue::L, TriValue::L},
    {TriValue::V, TriValue::L, TriValue::F},
};
constexpr TriValue kAnd[3][3] = {
    {TriValue::V, TriValue::L, TriValue::F},
    {TriValue::L, TriValue::L, TriValue::F},
    {TriValue::F, TriValue::F, TriValue::F},
};

void check_supported(const Prop& f) {
  std::visit(overloaded{
                 [](const prop::Var&) {},
                 [](const prop::Const&) {},
                 [](const prop::Neg& n) { check_supported(n.inner); },
                 [&](const prop::Claw&) {
                   throw UnsupportedError("trivalent semantics has no claw (conditional); found " + describe(f));
                 },
                 [&](const prop::Conn16&) {
                   throw UnsupportedError("trivalent semantics does not define " + describe(f));
                 },
                 [](const auto& b) {
                   check_supported(b.left);
                   check_supported(b.right);
                 },
             },
             f.node().value);
}

}  // namespace

char tri_char(TriValue v) {
  switch (v) {
    case TriValue::V: return 'V';
    case TriValue::L: return 'L';
    case TriValue::F: return 'F';
  }
  return '?';
}

int tri_rank(TriValue v) { return 2 - slot(v); }

TriValue tri_neg(TriValue x) {
  switch (x) {
    case TriValue::V: return TriValue::F;
    case TriValue::L: return TriValue::L;
    case TriValue::F: return TriValue::V;
  }
  return x;
}

TriValue tri_or(TriValue x, TriValue y) { return kOr[slot(x)][slot(y)]; }
TriValue tri_and(TriValue x, TriValue y) { return kAnd[slot(x)][slot(y)]; }

TriValue eval3(const Prop& f, const TriAssignment& a) {
  check_supported(f);
  return std::visit(overloaded{
                        [&](const prop::Var& v) {
                          auto it = a.find(v.name);
                          if (it == a.end()) throw EvalError("no value for variable " + v.name);
                          return it->second;
                        },
                        [](const prop::Const& c) { return c.value ? TriValue::V : TriValue::F; },
                        [&](const prop::Neg& n) { return tri_neg(eval3(n.inner, a)); },
                        [&](const prop::Prod& b) { return tri_and(eval3(b.left, a), eval3(b.right, a)); },
                        [&](const prop::Sum& b) { return tri_or(eval3(b.left, a), eval3(b.right, a)); },
                        [](const auto&) -> TriValue { throw std::logic_error("unreachable"); },
                    },
                    f.node().value);
}

TriTable tri_table(const Prop& f) {
  check_supported(f);
  TriTable t;
  t.variables = free_vars(f);
  const std::size_t n = t.variables.size();
  if (n > kMaxTriVars)
    throw LimitError("trivalent table needs " + std::to_string(n) + " variables; the limit is " +
                     std::to_string(kMaxTriVars));
  std::size_t count = 1;
  for (std::size_t k = 0; k < n; ++k) count *= 3;
  t.rows.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<TriValue> in(n);
    std::size_t rest = r;
    for (std::size_t k = n; k-- > 0;) {
      in[k] = kTriValues[rest % 3];
      rest /= 3;
    }
    TriAssignment a;
    for (std::size_t k = 0; k < n; ++k) a[t.variables[k]] = in[k];
    t.rows.push_back({std::move(in), eval3(f, a)});
  }
  return t;
}

std::string to_tsv(const TriTable& table) {
  std::ostringstream out;
  for (const auto& v : table.variables) out << v << '\t';
  out << "value\n";
  for (const auto& row : table.rows) {
    for (TriValue x : row.inputs) out << tri_char(x) << '\t';
    out << tri_char(row.value) << '\n';
  }
  return out.str();
}

}  // namespace illation
