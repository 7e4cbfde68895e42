#include <doctest.h>

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "common.hpp"
#include "illation/errors.hpp"
#include "illation/notation.hpp"
#include "illation/truth.hpp"

using namespace illation;
namespace p = prop;

namespace {

constexpr Notation kAll[] = {Notation::PeanoRussell, Notation::Peirce, Notation::Schroeder, Notation::Polish};

Prop v(const char* n) { return p::var(n); }

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("the four-notation formula parses to one tree") {
  Prop expect = p::claw(p::claw(p::claw(p::neg(v("c")), v("a")), p::claw(p::neg(v("a")), v("c"))),
                        p::claw(p::claw(p::neg(v("c")), v("a")), p::claw(p::claw(v("c"), v("a")), v("a"))));
  CHECK(parse("CCCNcaCNacCCNcaCCcaa", Notation::Polish) == expect);
  CHECK(parse("((~c>a)>(~a>c))>((~c>a)>((c>a)>a))", Notation::PeanoRussell) == expect);
  CHECK(print(expect, Notation::Polish) == "CCCNcaCNacCCNcaCCcaa");
  CHECK(print(expect, Notation::PeanoRussell) == "((~c>a)>(~a>c))>((~c>a)>((c>a)>a))");
}

TEST_CASE("small parses and prints") {
  CHECK(parse("a -< a", Notation::Peirce) == p::claw(v("a"), v("a")));
  CHECK(print(p::claw(p::neg(v("c")), v("a")), Notation::Polish) == "CNca");
  for (Notation n : kAll) CHECK(print(v("a"), n) == "a");
  CHECK(print(p::neg(v("a")), Notation::Polish) == "Na");
  CHECK(print(p::claw(v("a"), v("b")), Notation::Peirce) == "a -< b");
  CHECK(print(p::claw(v("a"), v("b")), Notation::Schroeder) == "a =< b");
  CHECK(print(p::neg(v("a")), Notation::Schroeder) == "a'");
  CHECK(print(p::prod(v("a"), p::sum(v("b"), v("c"))), Notation::Peirce) == "a(b + c)");
  CHECK(print(p::prod(v("a"), v("b")), Notation::PeanoRussell) == "a&b");
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("x>y>z", Notation::PeanoRussell) == p::claw(v("x"), p::claw(v("y"), v("z"))));
  CHECK(parse("a|b&c", Notation::PeanoRussell) == p::sum(v("a"), p::prod(v("b"), v("c"))));
  CHECK(parse("~a&b", Notation::PeanoRussell) == p::prod(p::neg(v("a")), v("b")));
  CHECK(parse("a + b c", Notation::Peirce) == p::sum(v("a"), p::prod(v("b"), v("c"))));
  CHECK(parse("-a -< b", Notation::Peirce) == p::claw(p::neg(v("a")), v("b")));
  CHECK(parse("a*b'", Notation::Schroeder) == p::prod(v("a"), p::neg(v("b"))));
  CHECK(parse("(ab)''", Notation::Schroeder) == p::neg(p::neg(p::prod(v("a"), v("b")))));
  CHECK(parse("#t | #f", Notation::PeanoRussell) == p::sum(p::verum(), p::falsum()));
  CHECK(parse("Eab", Notation::Polish) == p::conn16(kConnEquivalence, v("a"), v("b")));
  CHECK(print(p::conn16(kConnEquivalence, v("a"), v("b")), Notation::Polish) == "Eab");
}

TEST_CASE("syntax errors carry an offset and the expected set") {
  try {
    parse("(a>b", Notation::PeanoRussell);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse("Ca", Notation::Polish), ParseError);
  CHECK_THROWS_AS(parse("C a b", Notation::Polish), ParseError);
  CHECK_THROWS_AS(parse("Cab", Notation::PeanoRussell), ParseError);
  CHECK_THROWS_AS(parse("(a]", Notation::Peirce), ParseError);
  CHECK_THROWS_AS(parse("", Notation::Schroeder), ParseError);
  CHECK_THROWS_AS(parse("a b", Notation::PeanoRussell), ParseError);
  CHECK_THROWS_AS(print(p::verum(), Notation::Polish), UnsupportedError);
}

TEST_CASE("round trip through every notation") {
  const auto fs = corpus::props_depth2();
  std::vector<Prop> extra = {p::prod(p::verum(), v("a")), p::sum(p::falsum(), p::neg(p::verum())),
                             parse("(a>b)>(c>(d>e))", Notation::PeanoRussell)};
  for (Notation n : kAll) {
    for (const auto& f : fs) {
      std::string text = print(f, n);
      Prop back = parse(text, n);
      CHECK_MESSAGE(back == f, text);
    }
    if (n != Notation::Polish)
      for (const auto& f : extra) CHECK(parse(print(f, n), n) == f);
  }
}

TEST_CASE("translation preserves truth tables across notation pairs") {
  const auto fs = corpus::props_depth2();
  for (std::size_t i = 0; i < fs.size(); i += 5) {
    const Prop& f = fs[i];
    const auto vars = std::vector<std::string>{"a", "b"};
    for (Notation n1 : kAll)
      for (Notation n2 : kAll) {
        Prop g = parse(print(parse(print(f, n1), n1), n2), n2);
        CHECK(truth_table(g, vars) == truth_table(f, vars));
      }
  }
}

TEST_CASE("connectives print as their expansion") {
  for (int k = 1; k <= 16; ++k) {
    Prop f = p::conn16(k, v("a"), v("b"));
    for (Notation n : {Notation::PeanoRussell, Notation::Peirce, Notation::Schroeder}) {
      Prop g = parse(print(f, n), n);
      CHECK(truth_table(g, {"a", "b"}).rows == truth_table(f, {"a", "b"}).rows);
    }
  }
}

TEST_CASE("Polish uses one character per node on claw and negation formulas") {
  for (const auto& f : corpus::props_depth2()) {
    std::function<bool(const Prop&)> claw_neg = [&](const Prop& g) {
      if (g.as<p::Var>()) return true;
      if (auto n = g.as<p::Neg>()) return claw_neg(n->inner);
      if (auto c = g.as<p::Claw>()) return claw_neg(c->antecedent) && claw_neg(c->consequent);
      return false;
    };
    if (claw_neg(f)) CHECK(print(f, Notation::Polish).size() == node_count(f));
  }
}

TEST_CASE("Frege rendering") {
  CHECK(render_frege(v("a"), FregeFormat::Ascii) == "-- a\n");
  // Consequent on the main stroke, antecedent on the single branch.
  CHECK(render_frege(p::claw(v("x"), v("y")), FregeFormat::Ascii) == "-+-- y\n `-- x\n");
  CHECK(render_frege(p::neg(v("a")), FregeFormat::Ascii) == "-T-- a\n");
  Prop barbara = p::claw(p::prod(p::claw(v("x"), v("y")), p::claw(v("y"), v("z"))), p::claw(v("x"), v("z")));
  const std::string expect =
      "-+-+-- z\n"
      " | `-- x\n"
      " +-+-- y\n"
      " | `-- x\n"
      " `-+-- z\n"
      "   `-- y\n";
  std::string got = render_frege(barbara, FregeFormat::Ascii);
  CHECK(got == expect);
  // Two premise branches hang off the spine; every conditional opens with "-+".
  std::size_t spine_joins = 0, conditionals = 0;
  std::istringstream lines(got);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind(" +", 0) == 0 || line.rfind(" `", 0) == 0) ++spine_joins;
    for (std::size_t at = line.find("-+"); at != std::string::npos; at = line.find("-+", at + 1)) ++conditionals;
  }
  CHECK(spine_joins == 2);
  CHECK(conditionals == 4);
}

TEST_CASE("Frege rendering is injective on small formulas") {
  std::vector<Prop> fs;
  for (const auto& f : corpus::props_depth2()) {
    std::function<bool(const Prop&)> ok = [&](const Prop& g) {
      if (g.as<p::Var>()) return true;
      if (auto n = g.as<p::Neg>()) return ok(n->inner);
      if (auto c = g.as<p::Claw>()) {
        if (auto pr = c->antecedent.as<p::Prod>()) return ok(pr->left) && ok(pr->right) && ok(c->consequent);
        return ok(c->antecedent) && ok(c->consequent);
      }
      return false;
    };
    if (ok(f)) fs.push_back(f);
  }
  fs.push_back(p::claw(p::prod(v("a"), v("b")), v("a")));
  fs.push_back(p::claw(p::prod(p::neg(v("a")), v("b")), p::neg(v("b"))));
  std::map<std::string, Prop> seen;
  for (const auto& f : fs) {
    auto [it, fresh] = seen.emplace(render_frege(f, FregeFormat::Ascii), f);
    CHECK_MESSAGE((fresh || it->second == f), it->first);
  }
}

TEST_CASE("Frege SVG output is a standalone document") {
  std::string svg = render_frege(parse("(a&b)>~c", Notation::PeanoRussell), FregeFormat::Svg);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(count_lines(svg) > 5);
  // Labels are escaped.
  CHECK(render_frege(p::verum(), FregeFormat::Svg).find(">#t</text>") != std::string::npos);
  CHECK(render_frege(p::var("a"), FregeFormat::Svg) == render_frege(p::var("a"), FregeFormat::Svg));
}
