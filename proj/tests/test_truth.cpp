#include <doctest.h>

#include "common.hpp"
#include "illation/errors.hpp"
#include "illation/notation.hpp"
#include "illation/truth.hpp"

using namespace illation;
namespace p = prop;

namespace {

Prop v(const char* n) { return p::var(n); }
Prop pr(const char* text) { return parse(text, Notation::PeanoRussell); }

std::vector<bool> values(const TruthTable& t) {
  std::vector<bool> out;
  for (const auto& r : t.rows) out.push_back(r.value);
  return out;
}

}  // namespace

TEST_CASE("claw semantics") {
  CHECK_FALSE(eval2(p::claw(v("a"), v("b")), {{"a", true}, {"b", false}}));
  CHECK(eval2(p::claw(v("a"), v("b")), {{"a", false}, {"b", false}}));
  CHECK(eval2(p::verum(), {}));
  CHECK_THROWS_AS(eval2(v("a"), {}), EvalError);
  try {
    eval2(p::prod(v("a"), v("q")), {{"a", true}});
  } catch (const EvalError& e) {
    CHECK(std::string(e.what()).find('q') != std::string::npos);
  }
}

TEST_CASE("truth tables in canonical order") {
  TruthTable t = truth_table(p::claw(v("x"), v("y")));
  CHECK(values(t) == std::vector<bool>{true, false, true, true});
  CHECK(t.rows[1].inputs == std::vector<bool>{true, false});
  TruthTable f = truth_table(p::falsum());
  CHECK(f.rows.size() == 1);
  CHECK_FALSE(f.rows[0].value);
  CHECK(truth_table(pr("a&b&c&d")).rows.size() == 16);
}

TEST_CASE("the three-term table is two-variable equivalence") {
  TruthTable t = truth_table(p::conn16(kConnEquivalence, v("x"), v("y")));
  CHECK(to_tsv(t, "z") == "x\ty\tz\nv\tv\tv\nv\tf\tf\nf\tv\tf\nf\tf\tv\n");
}

TEST_CASE("the 1893 matrix is the claw with rows as antecedent") {
  // t f / t t f / f t t
  const bool matrix[2][2] = {{true, false}, {true, true}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(eval2(p::claw(v("x"), v("y")), {{"x", r == 0}, {"y", c == 0}}) == matrix[r][c]);
}

TEST_CASE("table size limit") {
  std::string text = "a_1";
  for (int i = 2; i <= 17; ++i) text += "&a_" + std::to_string(i);
  CHECK_THROWS_AS(truth_table(pr(text.c_str())), LimitError);
  CHECK_NOTHROW(truth_table(pr("a&b&c&d&e&f&g&h&i&j&k&l&m&n&o&p")));
}

TEST_CASE("tautologies and counterexamples") {
  CHECK(is_tautology(pr("((a>b)>a)>a")).holds());
  CHECK(is_tautology(pr("a>a")).holds());
  auto r = is_tautology(pr("a>b"));
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == Assignment{{"a", true}, {"b", false}});
  CHECK(format_assignment(*r.counterexample, {"a", "b"}) == "a=v b=f");
}

TEST_CASE("the five icons are tautologies") {
  CHECK(is_tautology(pr("a>a")).holds());
  CHECK(is_tautology(pr("(a&(a>b))>b")).holds());
  CHECK(is_tautology(pr("((a>b)&(b>c))>(a>c)")).holds());
  CHECK(is_tautology(pr("((a>b)&~b)>~a")).holds());
  CHECK(is_tautology(pr("((a>b)>a)>a")).holds());
}

TEST_CASE("indirect falsification") {
  SUBCASE("abbreviated table example") {
    Prop f = parse("(((-(a -< b)) -< c) -< d) -< e", Notation::Peirce);
    IndirectResult r = indirect_falsify(f);
    CHECK_FALSE(r.tautology);
    REQUIRE(r.counterexample);
    CHECK(*r.counterexample == Assignment{{"a", true}, {"b", true}, {"c", true}, {"d", true}, {"e", false}});
    CHECK_FALSE(eval2(f, *r.counterexample));
  }
  SUBCASE("chained claw") {
    IndirectResult r = indirect_falsify(pr("x>y>z"));
    REQUIRE(r.counterexample);
    CHECK(*r.counterexample == Assignment{{"x", true}, {"y", true}, {"z", false}});
  }
  SUBCASE("Peirce's law closes every branch on a") {
    IndirectResult r = indirect_falsify(pr("((a>b)>a)>a"));
    CHECK(r.tautology);
    bool forced_f = false, forced_v_clash = false;
    for (const auto& s : r.trace) {
      if (s.variable == "a" && !s.value) forced_f = true;
      if (s.variable == "a" && s.value && s.clash) forced_v_clash = true;
    }
    CHECK(forced_f);
    CHECK(forced_v_clash);
    // Replay: along every branch path, a clash is a forcing that contradicts an earlier one.
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
      if (!r.trace[k].clash) continue;
      bool contradicted = false;
      for (std::size_t j = 0; j < k; ++j) {
        int b = r.trace[k].branch;
        bool ancestor = false;
        for (int x = b; x >= 0; x = r.parent[x])
          if (x == r.trace[j].branch) ancestor = true;
        if (ancestor && r.trace[j].variable == r.trace[k].variable && r.trace[j].value != r.trace[k].value)
          contradicted = true;
      }
      CHECK(contradicted);
    }
  }
  SUBCASE("least completion equals the first falsifying row") {
    for (const auto& f : corpus::props_depth2()) {
      auto full = is_tautology(f);
      auto ind = indirect_falsify(f);
      CHECK(ind.tautology == full.holds());
      if (ind.counterexample) {
        Assignment a = *ind.counterexample;
        for (const auto& x : {"a", "b"}) a.emplace(x, true);
        CHECK_FALSE(eval2(f, a));
        for (const auto& [name, value] : *full.counterexample) CHECK(a.at(name) == value);
      }
    }
  }
}

TEST_CASE("claw and material implication agree") {
  for (const auto& pair : std::vector<std::pair<Prop, Prop>>{{v("x"), v("y")}, {pr("a&b"), pr("~a|c")}})
    CHECK_FALSE(semantic_difference(p::claw(pair.first, pair.second), p::sum(p::neg(pair.first), pair.second)));
}

TEST_CASE("sixteen connectives") {
  CHECK(connective_index({false, false, false, false}) == 1);
  CHECK(connective_index({true, true, true, true}) == 16);
  CHECK(connective_index({true, false, false, false}) == 5);
  CHECK(connective_vector(kConnImplication) == TruthVector{true, false, true, true});
  CHECK(connective_vector(kConnEquivalence) == TruthVector{true, false, false, true});
  for (int k = 1; k <= 16; ++k) CHECK(connective_index(connective_vector(k)) == k);
  CHECK_THROWS(connective_vector(0));
  CHECK(connective_table_text().substr(0, 2) == "1\t");
}

TEST_CASE("X-frames close exactly the false quadrants") {
  CHECK(xframe(1) == std::array<std::string, 3>{"\\|/", "-+-", "/|\\"});
  CHECK(xframe(16) == std::array<std::string, 3>{" | ", "-+-", " | "});
  for (int k = 1; k <= 16; ++k) {
    auto f = xframe(k);
    auto vec = connective_vector(k);
    const char corners[4] = {f[0][0], f[0][2], f[2][0], f[2][2]};
    int closed = 0;
    for (int q = 0; q < 4; ++q) {
      CHECK((corners[q] != ' ') == !vec[q]);
      closed += corners[q] != ' ';
    }
    CHECK(closed == std::count(vec.begin(), vec.end(), false));
  }
  auto imp = xframe(kConnImplication);
  CHECK(imp[0][2] == '/');
  CHECK(imp[0][0] == ' ');
}

TEST_CASE("algebraic normal form") {
  CHECK(anf(v("a")).to_string() == "a");
  CHECK(anf(p::claw(v("a"), v("b"))).to_string() == "1 ^ a ^ a*b");
  AnfPoly zero = anf(p::prod(v("a"), p::neg(v("a"))));
  CHECK(zero.monomials.empty());
  CHECK(zero.to_string() == "0");
  CHECK(anf(p::verum()).to_string() == "1");
  CHECK(anf(pr("a|b")).to_string() == "a ^ b ^ a*b");
}

TEST_CASE("ANF agrees with evaluation on four-variable formulas") {
  const std::vector<Prop> fs = {pr("(a&b)|(c&~d)"), pr("(a>b)>(c>d)"), pr("~(a|b)&(c|d)"), pr("a>(b>(c>(d>a)))"),
                                p::conn16(6, pr("a&b"), pr("c|d")), p::conn16(11, v("a"), pr("b>c"))};
  for (const auto& f : fs) {
    AnfPoly poly = anf(f);
    for (int m = 0; m < 16; ++m) {
      Assignment a = {{"a", (m & 1) != 0}, {"b", (m & 2) != 0}, {"c", (m & 4) != 0}, {"d", (m & 8) != 0}};
      CHECK(poly.evaluate(a) == oracle::eval(f, a));
    }
  }
}

TEST_CASE("congruence rule") {
  auto c1 = congruence_check(p::neg(p::neg(v("a"))), v("a"), p::claw(v("x"), v("b")), "x");
  CHECK(c1.premises_equal);
  CHECK(c1.contexts_equal);
  auto c2 = congruence_check(v("a"), v("a"), pr("x&~x"), "x");
  CHECK(c2.contexts_equal);
  auto c3 = congruence_check(v("a"), v("b"), v("x"), "x");
  CHECK_FALSE(c3.premises_equal);
  CHECK_FALSE(c3.contexts_equal);
  REQUIRE(c3.context_witness);
  CHECK(*c3.context_witness == Assignment{{"a", true}, {"b", false}});
  CHECK_THROWS_AS(congruence_check(v("a"), v("a"), v("y"), "x"), std::invalid_argument);
}

TEST_CASE("semantic equality is a congruence over generated pairs") {
  const auto fs = corpus::props_depth2();
  std::vector<Prop> contexts = {pr("x>b"), pr("~x&(x|a)"), pr("(x>x)>b"), pr("b|~x")};
  int pairs = 0;
  for (std::size_t i = 0; i < fs.size() && pairs < 200; i += 3)
    for (std::size_t j = i + 1; j < fs.size() && pairs < 200; j += 11) {
      if (semantic_difference(fs[i], fs[j])) continue;
      ++pairs;
      for (const auto& c : contexts) CHECK(congruence_check(fs[i], fs[j], c, "x").contexts_equal);
    }
  CHECK(pairs > 20);
}
