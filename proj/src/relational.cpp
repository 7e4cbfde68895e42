#include "illation/relational.hpp"

#include <algorithm>
#include <vector>

#include "illation/detail/overloaded.hpp"
#include "illation/errors.hpp"

namespace illation {

namespace {

using detail::overloaded;

enum class Tok { Ident, Quant, Neg, Prod, Sum, Claw, Open, Close, Comma, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    if (is_letter(c)) {
      std::size_t start = pos;
      while (pos < text.size() && is_letter(text[pos])) ++pos;
      std::string word(text.substr(start, pos - start));
      Tok kind = (word == "Pi" || word == "Sum" || word == "Sigma") ? Tok::Quant : Tok::Ident;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '<') {
      out.push_back({Tok::Claw, "-<", pos});
      pos += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '~':
      case '-': kind = Tok::Neg; break;
      case '&':
      case '*': kind = Tok::Prod; break;
      case '|':
      case '+': kind = Tok::Sum; break;
      case '>': kind = Tok::Claw; break;
      case '(':
      case '[': kind = Tok::Open; break;
      case ')':
      case ']': kind = Tok::Close; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      default:
        throw ParseError(pos, {"Pi", "Sum", "predicate", "~", "&", "|", ">", "(", ")"},
                         "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), pos});
    ++pos;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Rel run() {
    Rel f = formula();
    if (peek().kind != Tok::End) fail({"&", "|", ">", ")", "end of input"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.offset, std::move(expected), t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
  }

  void expect(Tok kind, const std::string& spelled) {
    if (peek().kind != kind) fail({spelled});
    next();
  }

  Rel formula() {
    if (peek().kind == Tok::Quant) return quantified();
    Rel lhs = sum_level();
    if (peek().kind == Tok::Claw) {
      next();
      return rel::claw(lhs, formula());
    }
    return lhs;
  }

  Rel quantified() {
    QuantKind kind = next().text == "Pi" ? QuantKind::Pi : QuantKind::Sigma;
    if (peek().kind != Tok::Ident) fail({"index variable"});
    std::string var = next().text;
    if (!std::all_of(var.begin(), var.end(), [](char c) { return c >= 'a' && c <= 'z'; }))
      throw ParseError(toks_[pos_ - 1].offset, {"lowercase index variable"}, "'" + var + "'");
    expect(Tok::Dot, ".");
    return rel::quant(kind, std::move(var), formula());
  }

  Rel sum_level() {
    Rel lhs = prod_level();
    while (peek().kind == Tok::Sum) {
      next();
      lhs = rel::sum(lhs, prod_level());
    }
    return lhs;
  }

  Rel prod_level() {
    Rel lhs = unary();
    while (peek().kind == Tok::Prod) {
      next();
      lhs = rel::prod(lhs, unary());
    }
    return lhs;
  }

  Rel unary() {
    if (peek().kind == Tok::Neg) {
      next();
      return rel::neg(unary());
    }
    if (peek().kind == Tok::Quant) return quantified();
    return primary();
  }

  Rel primary() {
    if (peek().kind == Tok::Open) {
      next();
      Rel inner = formula();
      expect(Tok::Close, ")");
      return inner;
    }
    if (peek().kind != Tok::Ident) fail({"predicate", "Pi", "Sum", "~", "("});
    const Token& name = next();
    if (name.text.size() != 1) throw ParseError(name.offset, {"one-letter predicate"}, "'" + name.text + "'");
    expect(Tok::Open, "(");
    std::vector<std::string> indices;
    while (true) {
      if (peek().kind != Tok::Ident) fail({"index variable"});
      const Token& ix = next();
      if (!std::all_of(ix.text.begin(), ix.text.end(), [](char c) { return c >= 'a' && c <= 'z'; }))
        throw ParseError(ix.offset, {"lowercase index variable"}, "'" + ix.text + "'");
      indices.push_back(ix.text);
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      expect(Tok::Close, ")");
      break;
    }
    return rel::atom(name.text, std::move(indices));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

enum Level { kQuant = -1, kClaw = 0, kSum = 1, kProd = 2, kNeg = 3, kAtom = 4 };

struct Printed {
  std::string text;
  int level;
};

Printed print(const Rel& f) {
  auto at_least = [](const Rel& child, int level) {
    Printed p = print(child);
    return p.level >= level ? p.text : "(" + p.text + ")";
  };
  return std::visit(overloaded{
                        [](const rel::Atom& a) {
                          std::string out = a.predicate + "(";
                          for (std::size_t i = 0; i < a.indices.size(); ++i) out += (i ? "," : "") + a.indices[i];
                          return Printed{out + ")", kAtom};
                        },
                        [&](const rel::Neg& n) { return Printed{"~" + at_least(n.inner, kNeg), kNeg}; },
                        [&](const rel::Prod& b) {
                          return Printed{at_least(b.left, kProd) + " & " + at_least(b.right, kNeg), kProd};
                        },
                        [&](const rel::Sum& b) {
                          return Printed{at_least(b.left, kSum) + " | " + at_least(b.right, kProd), kSum};
                        },
                        [&](const rel::Claw& c) {
                          return Printed{at_least(c.antecedent, kSum) + " > " + at_least(c.consequent, kSum), kClaw};
                        },
                        [](const rel::Quant& q) {
                          std::string head = q.kind == QuantKind::Pi ? "Pi " : "Sum ";
                          return Printed{head + q.var + " . " + print(q.body).text, kQuant};
                        },
                    },
                    f.node().value);
}

}  // namespace

Rel parse_relational(std::string_view text) { return Parser(text).run(); }

std::string print_relational(const Rel& f) { return print(f).text; }

}  // namespace illation
