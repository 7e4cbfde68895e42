#include "illation/notation.hpp"

#include <algorithm>
#include <vector>

#include "illation/detail/overloaded.hpp"
#include "illation/errors.hpp"
#include "illation/truth.hpp"

namespace illation {

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error("syntax error at offset " + std::to_string(offset) + ": found " + found + ", expected one of: " +
            join(expected, " ")),
      offset_(offset),
      expected_(std::move(expected)) {}

std::string_view notation_name(Notation n) {
  switch (n) {
    case Notation::PeanoRussell: return "peano-russell";
    case Notation::Peirce: return "peirce";
    case Notation::Schroeder: return "schroeder";
    case Notation::Polish: return "polish";
  }
  return "?";
}

std::optional<Notation> notation_from_name(std::string_view name) {
  for (auto n : {Notation::PeanoRussell, Notation::Peirce, Notation::Schroeder, Notation::Polish})
    if (notation_name(n) == name) return n;
  return std::nullopt;
}

namespace {

using detail::overloaded;

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string describe_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return "end of input";
  return "'" + std::string(1, text[pos]) + "'";
}

// Reads a variable name starting at `pos`: a letter followed by `_<digits>` groups.
// A lone uppercase letter is not a variable. Returns the length read, or 0.
std::size_t scan_var(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return 0;
  char c = text[pos];
  if (!is_lower(c) && !is_upper(c)) return 0;
  std::size_t i = pos + 1;
  while (i + 1 < text.size() && text[i] == '_' && is_digit(text[i + 1])) {
    i += 1;
    while (i < text.size() && is_digit(text[i])) ++i;
  }
  if (i == pos + 1 && is_upper(c)) return 0;
  return i - pos;
}

// Algebraic notations ----------------------------------------------------

enum class Tok { Var, Const, Neg, Prime, Prod, Sum, Claw, Open, Close, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

struct Spelling {
  std::string_view neg;    // prefix negation, empty if postfix
  std::string_view prime;  // postfix negation, empty if prefix
  std::string_view prod;
  std::string_view sum;
  std::string_view claw;
  bool juxtaposition;
  bool tight;  // binary operators written without surrounding spaces
};

Spelling spelling(Notation n) {
  switch (n) {
    case Notation::PeanoRussell: return {"~", "", "&", "|", ">", false, true};
    case Notation::Peirce: return {"-", "", "*", "+", "-<", true, false};
    case Notation::Schroeder: return {"", "'", "*", "+", "=<", true, false};
    case Notation::Polish: break;
  }
  throw std::logic_error("Polish notation has no algebraic spelling");
}

std::vector<std::string> operator_tokens(const Spelling& sp) {
  std::vector<std::string> out;
  for (auto s : {sp.neg, sp.prime, sp.prod, sp.sum, sp.claw})
    if (!s.empty()) out.emplace_back(s);
  return out;
}

std::vector<Token> lex(std::string_view text, const Spelling& sp) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto starts = [&](std::string_view s) { return !s.empty() && text.substr(pos, s.size()) == s; };
  while (pos < text.size()) {
    char c = text[pos];
    if (is_space(c)) {
      ++pos;
      continue;
    }
    if (c == '(' || c == '[' || c == '{') {
      out.push_back({Tok::Open, std::string(1, c), pos++});
      continue;
    }
    if (c == ')' || c == ']' || c == '}') {
      out.push_back({Tok::Close, std::string(1, c), pos++});
      continue;
    }
    if (c == '#') {
      if (pos + 1 < text.size() && (text[pos + 1] == 't' || text[pos + 1] == 'f')) {
        out.push_back({Tok::Const, std::string(text.substr(pos, 2)), pos});
        pos += 2;
        continue;
      }
      throw ParseError(pos + 1, {"t", "f"}, describe_at(text, pos + 1));
    }
    if (std::size_t len = scan_var(text, pos)) {
      out.push_back({Tok::Var, std::string(text.substr(pos, len)), pos});
      pos += len;
      continue;
    }
    // Longest operator first, so the Peirce claw wins over prefix negation.
    std::vector<std::pair<std::string_view, Tok>> ops = {
        {sp.claw, Tok::Claw}, {sp.neg, Tok::Neg}, {sp.prime, Tok::Prime}, {sp.prod, Tok::Prod}, {sp.sum, Tok::Sum}};
    std::stable_sort(ops.begin(), ops.end(), [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    bool matched = false;
    for (const auto& [s, kind] : ops) {
      if (starts(s)) {
        out.push_back({kind, std::string(s), pos});
        pos += s.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    auto expected = std::vector<std::string>{"variable", "#t", "#f", "(", ")"};
    for (auto& s : operator_tokens(sp)) expected.push_back(s);
    throw ParseError(pos, std::move(expected), describe_at(text, pos));
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

char closer_for(char open) {
  switch (open) {
    case '(': return ')';
    case '[': return ']';
    default: return '}';
  }
}

class AlgebraicParser {
 public:
  AlgebraicParser(std::string_view text, Notation n) : text_(text), sp_(spelling(n)), toks_(lex(text, sp_)) {}

  Prop run() {
    Prop f = claw_level();
    if (peek().kind != Tok::End) fail(after_operand());
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.offset, std::move(expected), found);
  }

  std::vector<std::string> operand_start() const {
    std::vector<std::string> e{"variable", "#t", "#f", "("};
    if (!sp_.neg.empty()) e.emplace_back(sp_.neg);
    return e;
  }

  std::vector<std::string> after_operand() const {
    std::vector<std::string> e;
    for (auto s : {sp_.prime, sp_.prod, sp_.sum, sp_.claw})
      if (!s.empty()) e.emplace_back(s);
    e.emplace_back(")");
    e.emplace_back("end of input");
    return e;
  }

  bool starts_operand(const Token& t) const {
    return t.kind == Tok::Var || t.kind == Tok::Const || t.kind == Tok::Open || t.kind == Tok::Neg;
  }

  Prop claw_level() {
    Prop lhs = sum_level();
    if (peek().kind == Tok::Claw) {
      next();
      return prop::claw(lhs, claw_level());
    }
    return lhs;
  }

  Prop sum_level() {
    Prop lhs = prod_level();
    while (peek().kind == Tok::Sum) {
      next();
      lhs = prop::sum(lhs, prod_level());
    }
    return lhs;
  }

  Prop prod_level() {
    Prop lhs = unary();
    while (true) {
      if (peek().kind == Tok::Prod) {
        next();
        lhs = prop::prod(lhs, unary());
      } else if (sp_.juxtaposition && starts_operand(peek())) {
        lhs = prop::prod(lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  Prop unary() {
    if (peek().kind == Tok::Neg) {
      next();
      return prop::neg(unary());
    }
    Prop p = primary();
    while (peek().kind == Tok::Prime) {
      next();
      p = prop::neg(p);
    }
    return p;
  }

  Prop primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Var: next(); return prop::var(t.text);
      case Tok::Const: next(); return t.text == "#t" ? prop::verum() : prop::falsum();
      case Tok::Open: {
        char close = closer_for(next().text[0]);
        Prop inner = claw_level();
        if (peek().kind != Tok::Close || peek().text[0] != close) {
          auto e = after_operand();
          e.erase(std::remove(e.begin(), e.end(), ")"), e.end());
          e.erase(std::remove(e.begin(), e.end(), "end of input"), e.end());
          e.emplace_back(1, close);
          fail(std::move(e));
        }
        next();
        return inner;
      }
      default: fail(operand_start());
    }
  }

  std::string_view text_;
  Spelling sp_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Polish -----------------------------------------------------------------

class PolishParser {
 public:
  explicit PolishParser(std::string_view text) : text_(text) {}

  Prop run() {
    Prop f = formula();
    if (pos_ != text_.size()) throw ParseError(pos_, {"end of input"}, describe_at(text_, pos_));
    return f;
  }

 private:
  Prop formula() {
    static const std::vector<std::string> kExpected{"C", "N", "K", "A", "E", "variable"};
    if (pos_ >= text_.size()) throw ParseError(pos_, kExpected, "end of input");
    char c = text_[pos_];
    if (is_space(c)) throw ParseError(pos_, kExpected, "whitespace (not allowed in Polish notation)");
    if (std::size_t len = scan_var(text_, pos_)) {
      std::string name(text_.substr(pos_, len));
      pos_ += len;
      return prop::var(std::move(name));
    }
    ++pos_;
    switch (c) {
      case 'N': return prop::neg(formula());
      case 'C': {
        Prop a = formula();
        return prop::claw(a, formula());
      }
      case 'K': {
        Prop a = formula();
        return prop::prod(a, formula());
      }
      case 'A': {
        Prop a = formula();
        return prop::sum(a, formula());
      }
      case 'E': {
        Prop a = formula();
        return prop::conn16(kConnEquivalence, a, formula());
      }
      default: break;
    }
    --pos_;
    std::string found = c == '#' ? "constant (not expressible in Polish notation)" : describe_at(text_, pos_);
    throw ParseError(pos_, kExpected, found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Printing ---------------------------------------------------------------

enum Level { kClaw = 0, kSum = 1, kProd = 2, kNeg = 3, kAtom = 4 };

struct Printed {
  std::string text;
  int level;
};

Printed print_algebraic(const Prop& f, const Spelling& sp) {
  auto at_least = [&](const Prop& child, int level) {
    Printed p = print_algebraic(child, sp);
    return p.level >= level ? p.text : "(" + p.text + ")";
  };
  auto spaced = [&](std::string_view op) {
    return sp.tight ? std::string(op) : " " + std::string(op) + " ";
  };
  return std::visit(
      overloaded{
          [&](const prop::Var& v) { return Printed{v.name, kAtom}; },
          [&](const prop::Const& c) { return Printed{c.value ? "#t" : "#f", kAtom}; },
          [&](const prop::Neg& n) {
            if (!sp.prime.empty()) return Printed{at_least(n.inner, kNeg) + std::string(sp.prime), kNeg};
            return Printed{std::string(sp.neg) + at_least(n.inner, kNeg), kNeg};
          },
          [&](const prop::Prod& b) {
            std::string op = sp.juxtaposition ? "" : std::string(sp.prod);
            return Printed{at_least(b.left, kProd) + op + at_least(b.right, kNeg), kProd};
          },
          [&](const prop::Sum& b) {
            return Printed{at_least(b.left, kSum) + spaced(sp.sum) + at_least(b.right, kProd), kSum};
          },
          [&](const prop::Claw& c) {
            return Printed{at_least(c.antecedent, kSum) + spaced(sp.claw) + at_least(c.consequent, kSum), kClaw};
          },
          [&](const prop::Conn16& c) {
            return print_algebraic(connective_expansion(c.index, c.left, c.right), sp);
          },
      },
      f.node().value);
}

void print_polish(const Prop& f, std::string& out) {
  std::visit(overloaded{
                 [&](const prop::Var& v) { out += v.name; },
                 [&](const prop::Const&) {
                   throw UnsupportedError("constants have no spelling in Polish notation");
                 },
                 [&](const prop::Neg& n) {
                   out += 'N';
                   print_polish(n.inner, out);
                 },
                 [&](const prop::Claw& c) {
                   out += 'C';
                   print_polish(c.antecedent, out);
                   print_polish(c.consequent, out);
                 },
                 [&](const prop::Prod& b) {
                   out += 'K';
                   print_polish(b.left, out);
                   print_polish(b.right, out);
                 },
                 [&](const prop::Sum& b) {
                   out += 'A';
                   print_polish(b.left, out);
                   print_polish(b.right, out);
                 },
                 [&](const prop::Conn16& c) {
                   if (c.index == kConnEquivalence) {
                     out += 'E';
                     print_polish(c.left, out);
                     print_polish(c.right, out);
                   } else {
                     print_polish(connective_expansion(c.index, c.left, c.right), out);
                   }
                 },
             },
             f.node().value);
}

}  // namespace

Prop parse(std::string_view text, Notation notation) {
  if (notation == Notation::Polish) return PolishParser(text).run();
  return AlgebraicParser(text, notation).run();
}

std::string print(const Prop& f, Notation notation) {
  if (notation == Notation::Polish) {
    std::string out;
    print_polish(f, out);
    return out;
  }
  return print_algebraic(f, spelling(notation)).text;
}

}  // namespace illation
