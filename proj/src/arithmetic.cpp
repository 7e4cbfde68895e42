#include "illation/arithmetic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "illation/errors.hpp"

namespace illation {

namespace {

constexpr const char* kReadings =
    "R read as a reflexive partial order; connected = any two elements comparable; "
    "pred(x) = R-greatest y != x with yRx; succ(x) = R-least y != x with xRy; "
    "axiom 3 ranges over elements other than the R-minimum";

// Candidates are scanned in carrier order, so ties under a non-antisymmetric R resolve to the first.
std::optional<std::string> extremum(const NumberStructure& s, const std::vector<std::string>& cands, bool greatest) {
  for (const auto& c : cands) {
    bool ok = std::all_of(cands.begin(), cands.end(),
                          [&](const std::string& z) { return greatest ? s.related(z, c) : s.related(c, z); });
    if (ok) return c;
  }
  return std::nullopt;
}

std::optional<std::string> minimum(const NumberStructure& s) { return extremum(s, s.carrier, false); }

AxiomVerdict fail(Axiom a, std::vector<std::string> witness, std::string detail) {
  return {a, false, std::move(witness), std::move(detail)};
}

AxiomVerdict pass(Axiom a, std::string detail) { return {a, true, {}, std::move(detail)}; }

AxiomVerdict axiom1(const NumberStructure& s) {
  const auto& N = s.carrier;
  for (const auto& x : N)
    if (!s.related(x, x)) return fail(Axiom::A1, {x}, "not reflexive: missing (" + x + "," + x + ")");
  for (const auto& x : N)
    for (const auto& y : N)
      if (x != y && s.related(x, y) && s.related(y, x))
        return fail(Axiom::A1, {x, y}, "not antisymmetric: " + x + " R " + y + " and " + y + " R " + x);
  for (const auto& x : N)
    for (const auto& y : N)
      for (const auto& z : N)
        if (s.related(x, y) && s.related(y, z) && !s.related(x, z))
          return fail(Axiom::A1, {x, y, z}, "not transitive: " + x + " R " + y + " R " + z + " but not " + x + " R " + z);
  return pass(Axiom::A1, "partial order");
}

AxiomVerdict axiom2(const NumberStructure& s) {
  for (const auto& x : s.carrier)
    for (const auto& y : s.carrier)
      if (!s.related(x, y) && !s.related(y, x)) return fail(Axiom::A2, {x, y}, x + " and " + y + " are incomparable");
  return pass(Axiom::A2, "connected");
}

AxiomVerdict axiom3(const NumberStructure& s) {
  auto m = minimum(s);
  for (const auto& x : s.carrier) {
    if (m && x == *m) continue;
    if (!predecessor(s, x)) return fail(Axiom::A3, {x}, x + " has no predecessor");
  }
  return pass(Axiom::A3, "closed under predecessors");
}

AxiomVerdict axiom4a(const NumberStructure& s) {
  for (const auto& x : s.carrier)
    if (!s.related(s.one, x)) return fail(Axiom::A4a, {x}, "not " + s.one + " R " + x);
  return pass(Axiom::A4a, s.one + " is the minimum");
}

AxiomVerdict axiom4b(const NumberStructure& s) {
  if (auto top = extremum(s, s.carrier, true)) return fail(Axiom::A4b, {*top}, *top + " is a maximum");
  return pass(Axiom::A4b, "no maximum");
}

AxiomVerdict axiom5(const NumberStructure& s) {
  const std::size_t n = s.carrier.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[s.carrier[i]] = i;
  std::vector<int> succ(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (auto y = successor(s, s.carrier[i])) succ[i] = static_cast<int>(index[*y]);
  const std::size_t one = index.at(s.one);
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  for (std::uint32_t S = 0; S < full; ++S) {
    if (!(S >> one & 1U)) continue;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      if ((S >> i & 1U) && succ[i] >= 0 && !(S >> succ[i] & 1U)) closed = false;
    if (!closed) continue;
    std::vector<std::string> members;
    for (std::size_t i = 0; i < n; ++i)
      if (S >> i & 1U) members.push_back(s.carrier[i]);
    std::string listed;
    for (const auto& e : members) listed += (listed.empty() ? "" : ",") + e;
    return fail(Axiom::A5, members, "{" + listed + "} contains " + s.one + " and is closed under successor");
  }
  return pass(Axiom::A5, "induction holds over all subsets");
}

}  // namespace

void NumberStructure::validate() const {
  if (carrier.empty()) throw FormatError("carrier must be nonempty");
  std::set<std::string> ids(carrier.begin(), carrier.end());
  if (ids.size() != carrier.size()) throw FormatError("carrier has duplicate elements");
  if (!ids.count(one)) throw FormatError("distinguished element " + one + " is not in the carrier");
  for (const auto& [x, y] : R)
    if (!ids.count(x) || !ids.count(y)) throw FormatError("R mentions (" + x + "," + y + ") outside the carrier");
}

NumberStructure chain(int n) {
  if (n < 1) throw std::invalid_argument("chain needs n >= 1");
  NumberStructure s;
  for (int i = 1; i <= n; ++i) s.carrier.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) s.R.insert({std::to_string(i), std::to_string(j)});
  s.one = "1";
  return s;
}

NumberStructure number_structure_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    NumberStructure s;
    s.carrier = j.at("carrier").get<std::vector<std::string>>();
    s.one = j.at("one").get<std::string>();
    for (const auto& p : j.at("R")) {
      if (!p.is_array() || p.size() != 2) throw FormatError("each R entry must be a pair");
      s.R.insert({p[0].get<std::string>(), p[1].get<std::string>()});
    }
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("number structure JSON: ") + e.what());
  }
}

std::string number_structure_to_json(const NumberStructure& s) {
  nlohmann::json R = nlohmann::json::array();
  for (const auto& [x, y] : s.R) R.push_back({x, y});
  nlohmann::json j = {{"carrier", s.carrier}, {"one", s.one}, {"R", R}};
  return j.dump() + "\n";
}

std::string axiom_label(Axiom a) {
  switch (a) {
    case Axiom::A1: return "1";
    case Axiom::A2: return "2";
    case Axiom::A3: return "3";
    case Axiom::A4a: return "4a";
    case Axiom::A4b: return "4b";
    case Axiom::A5: return "5";
  }
  return "?";
}

const AxiomVerdict& AxiomReport::at(Axiom a) const {
  for (const auto& v : verdicts)
    if (v.axiom == a) return v;
  throw std::out_of_range("axiom not in report");
}

bool AxiomReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.holds; });
}

std::optional<std::string> predecessor(const NumberStructure& s, const std::string& x) {
  std::vector<std::string> below;
  for (const auto& y : s.carrier)
    if (y != x && s.related(y, x)) below.push_back(y);
  return extremum(s, below, true);
}

std::optional<std::string> successor(const NumberStructure& s, const std::string& x) {
  std::vector<std::string> above;
  for (const auto& y : s.carrier)
    if (y != x && s.related(x, y)) above.push_back(y);
  return extremum(s, above, false);
}

AxiomReport check_axioms(const NumberStructure& s) {
  s.validate();
  if (s.carrier.size() > kMaxAxiomCarrier)
    throw LimitError("carrier has " + std::to_string(s.carrier.size()) + " elements; the limit is " +
                     std::to_string(kMaxAxiomCarrier));
  return {{axiom1(s), axiom2(s), axiom3(s), axiom4a(s), axiom4b(s), axiom5(s)}};
}

std::string report_text(const AxiomReport& r) {
  std::string out = std::string("# ") + kReadings + "\n";
  for (const auto& v : r.verdicts) {
    std::string label = axiom_label(v.axiom);
    out += "axiom " + label + std::string(3 - label.size(), ' ') + (v.holds ? "pass" : "fail");
    if (!v.holds) {
      out += "  witness";
      for (const auto& w : v.witness) out += " " + w;
    }
    out += "  " + v.detail + "\n";
  }
  return out;
}

std::string report_json(const AxiomReport& r) {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& v : r.verdicts)
    axioms.push_back({{"axiom", axiom_label(v.axiom)}, {"holds", v.holds}, {"witness", v.witness}, {"detail", v.detail}});
  nlohmann::json j = {{"readings", kReadings}, {"axioms", axioms}, {"all_hold", r.all_hold()}};
  return j.dump() + "\n";
}

}  // namespace illation
