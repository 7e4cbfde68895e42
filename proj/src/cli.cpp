#include "illation/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "illation/arithmetic.hpp"
#include "illation/errors.hpp"
#include "illation/hfset.hpp"
#include "illation/notation.hpp"
#include "illation/quantifiers.hpp"
#include "illation/relational.hpp"
#include "illation/trivalent.hpp"
#include "illation/truth.hpp"

namespace illation::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

const std::map<std::string, Notation> kNotations = {
    {"peano-russell", Notation::PeanoRussell},
    {"peirce", Notation::Peirce},
    {"schroeder", Notation::Schroeder},
    {"polish", Notation::Polish},
};

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string slurp(std::istream& in) { return std::string(std::istreambuf_iterator<char>(in), {}); }

// "-" reads standard input; anything else is the formula itself.
std::string formula_text(const std::string& arg, std::istream& in) { return trim(arg == "-" ? slurp(in) : arg); }

std::string file_text(const std::string& path, std::istream& in) {
  if (path == "-") return slurp(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  return slurp(f);
}

std::size_t atom_limit(std::size_t fallback) {
  const char* env = std::getenv("ILLATION_MAX_ATOMS");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end || v == 0 || env[0] == '-') throw UsageError("ILLATION_MAX_ATOMS must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::string without_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

// A lone argument such as "-a" or "-a -< b" is a formula, not an option; move
// those behind "--" so the option parser leaves them alone.
std::vector<std::string> shield_formulas(const std::vector<std::string>& args) {
  std::vector<std::string> kept, formulas;
  bool after_separator = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (after_separator) {
      formulas.push_back(a);
    } else if (a == "--") {
      after_separator = true;
    } else if (i > 0 && a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") {
      formulas.push_back(a);
    } else {
      kept.push_back(a);
    }
  }
  if (!formulas.empty()) {
    kept.push_back("--");
    kept.insert(kept.end(), formulas.begin(), formulas.end());
  }
  return kept;
}

struct Options {
  std::string formula;
  std::string from = "peano-russell";
  std::string to = "peano-russell";
  std::string format = "ascii";
  std::string notation = "peano-russell";
  int values = 2;
  std::string method = "full";
  int domain = 1;
  int max = 3;
  std::string file;
  bool json = false;
  std::string atoms = "a,b,c";
  std::vector<std::string> pair_atoms;
  std::string structure;
};

int cmd_translate(const Options& o, std::istream& in, std::ostream& out) {
  Prop f = parse(formula_text(o.formula, in), kNotations.at(o.from));
  if (o.to == "frege")
    out << render_frege(f, o.format == "svg" ? FregeFormat::Svg : FregeFormat::Ascii);
  else
    out << print(f, kNotations.at(o.to)) << '\n';
  return kExitOk;
}

int cmd_table(const Options& o, std::istream& in, std::ostream& out) {
  Prop f = parse(formula_text(o.formula, in), kNotations.at(o.notation));
  if (o.values == 3) {
    try {
      out << to_tsv(tri_table(f));
    } catch (const UnsupportedError& e) {
      throw UsageError(std::string("three-valued table: ") + e.what());
    }
  } else {
    out << to_tsv(truth_table(f));
  }
  return kExitOk;
}

int cmd_taut(const Options& o, std::istream& in, std::ostream& out) {
  Prop f = parse(formula_text(o.formula, in), kNotations.at(o.notation));
  const auto vars = free_vars(f);
  std::optional<Assignment> counter;
  if (o.method == "indirect") {
    IndirectResult r = indirect_falsify(f);
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
      const TraceStep& s = r.trace[k];
      int parent = r.parent[s.branch];
      out << "step " << k + 1 << " branch " << s.branch << " (parent "
          << (parent < 0 ? std::string("-") : std::to_string(parent)) << ") " << s.variable << '='
          << (s.value ? 'v' : 'f') << (s.clash ? " clash" : "") << '\n';
    }
    counter = r.counterexample;
  } else {
    counter = is_tautology(f).counterexample;
  }
  if (!counter) {
    out << "tautology\n";
    return kExitOk;
  }
  out << "counterexample " << format_assignment(*counter, vars) << '\n';
  return kExitNegative;
}

int cmd_connectives(std::ostream& out) {
  out << connective_table_text() << '\n';
  std::array<std::string, 3> rows;
  std::string header;
  for (int i = 1; i <= 16; ++i) {
    std::string label = std::to_string(i);
    header += (i > 1 ? "  " : "") + std::string(3 - label.size(), ' ') + label;
    auto frame = xframe(i);
    for (int r = 0; r < 3; ++r) rows[r] += (i > 1 ? "  " : "") + frame[r];
  }
  out << header << '\n';
  for (const auto& r : rows) out << r << '\n';
  return kExitOk;
}

int cmd_anf(const Options& o, std::istream& in, std::ostream& out) {
  out << anf(parse(formula_text(o.formula, in), kNotations.at(o.notation))).to_string() << '\n';
  return kExitOk;
}

int cmd_expand(const Options& o, std::istream& in, std::ostream& out) {
  Rel f = parse_relational(formula_text(o.formula, in));
  out << print(expand(f, o.domain, atom_limit(kDefaultMaxExpandAtoms)), kNotations.at(o.to)) << '\n';
  return kExitOk;
}

int cmd_sat(const Options& o, std::istream& in, std::ostream& out) {
  Rel f = parse_relational(formula_text(o.formula, in));
  auto w = sat_search(f, o.domain, atom_limit(kDefaultMaxSatCells));
  if (!w) {
    out << "unsatisfiable\n";
    return kExitNegative;
  }
  out << structure_to_json(*w);
  return kExitOk;
}

int cmd_scan(const Options& o, std::istream& in, std::ostream& out) {
  Rel f = parse_relational(formula_text(o.formula, in));
  const std::size_t limit = atom_limit(kDefaultMaxSatCells);
  SatScanReport report = sat_scan(f, o.max, limit);
  for (const auto& v : report.sizes) {
    bool valid = !sat_search(rel::neg(f), v.size, limit).has_value();
    out << "size " << v.size << (v.witness ? " satisfiable" : " unsatisfiable") << (valid ? " valid" : " not-valid");
    if (v.witness) out << " witness " << without_newline(structure_to_json(*v.witness));
    if (v.extension) out << " extends-to " << without_newline(structure_to_json(*v.extension));
    out << '\n';
  }
  return kExitOk;
}

int cmd_axioms(const Options& o, std::istream& in, std::ostream& out) {
  AxiomReport r = check_axioms(number_structure_from_json(file_text(o.file, in)));
  out << (o.json ? report_json(r) : report_text(r));
  return r.all_hold() ? kExitOk : kExitNegative;
}

std::vector<std::string> split_atoms(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (item.empty()) throw UsageError("empty atom name in --atoms");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("--atoms needs at least one name");
  return out;
}

int cmd_pair_check(const Options& o, std::ostream& out) {
  if (!o.pair_atoms.empty()) {
    if (o.pair_atoms.size() != 4) throw UsageError("pair-check takes exactly four atoms: a b c d");
    const auto& a = o.pair_atoms;
    HFSet p = wiener_pair(HFSet::atom(a[0]), HFSet::atom(a[1]));
    HFSet q = wiener_pair(HFSet::atom(a[2]), HFSet::atom(a[3]));
    bool eq = hf_equal(p, q);
    out << "<" << a[0] << "," << a[1] << "> = " << p.to_string() << '\n'
        << "<" << a[2] << "," << a[3] << "> = " << q.to_string() << '\n'
        << (eq ? "equal" : "unequal") << '\n';
    return eq ? kExitOk : kExitNegative;
  }
  auto names = split_atoms(o.atoms);
  std::size_t checked = 0;
  for (const auto& a : names)
    for (const auto& b : names)
      for (const auto& c : names)
        for (const auto& d : names) {
          ++checked;
          bool eq = hf_equal(wiener_pair(HFSet::atom(a), HFSet::atom(b)), wiener_pair(HFSet::atom(c), HFSet::atom(d)));
          if (eq != (a == c && b == d)) {
            out << "injectivity fails: <" << a << "," << b << "> vs <" << c << "," << d << ">\n";
            return kExitNegative;
          }
        }
  out << "injective over " << checked << " pairs of pairs\n";
  return kExitOk;
}

int cmd_eval(const Options& o, std::istream& in, std::ostream& out) {
  if (o.formula == "-" && o.structure == "-") throw UsageError("formula and structure cannot both come from stdin");
  Structure s = structure_from_json(file_text(o.structure, in));
  bool v = eval_in(parse_relational(formula_text(o.formula, in)), s);
  out << (v ? "v" : "f") << '\n';
  return v ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Peircean logic workbench: notations, truth tables, finite quantifier semantics, number axioms",
               "illation"};
  app.require_subcommand(1);
  Options o;
  const auto notation_names = CLI::IsMember(std::vector<std::string>{"peano-russell", "peirce", "schroeder", "polish"});
  auto add_formula = [&](CLI::App* sub) {
    sub->add_option("formula", o.formula, "formula text, or - to read standard input")->required();
  };

  auto* translate = app.add_subcommand("translate", "print a formula in another notation");
  translate->add_option("--from", o.from, "source notation")->check(notation_names)->capture_default_str();
  translate->add_option("--to", o.to, "target notation, or frege")
      ->check(CLI::IsMember(std::vector<std::string>{"peano-russell", "peirce", "schroeder", "polish", "frege"}))
      ->capture_default_str();
  translate->add_option("--format", o.format, "frege output format")
      ->check(CLI::IsMember(std::vector<std::string>{"ascii", "svg"}))
      ->capture_default_str();
  add_formula(translate);

  auto* table = app.add_subcommand("table", "truth table as TSV");
  table->add_option("--notation", o.notation)->check(notation_names)->capture_default_str();
  table->add_option("--values", o.values, "2 for v/f, 3 for V/L/F")->check(CLI::IsMember({2, 3}))->capture_default_str();
  add_formula(table);

  auto* taut = app.add_subcommand("taut", "tautology check");
  taut->add_option("--notation", o.notation)->check(notation_names)->capture_default_str();
  taut->add_option("--method", o.method)
      ->check(CLI::IsMember(std::vector<std::string>{"full", "indirect"}))
      ->capture_default_str();
  add_formula(taut);

  auto* connectives = app.add_subcommand("connectives", "the sixteen binary connectives and their X-frames");

  auto* anf_cmd = app.add_subcommand("anf", "algebraic normal form over GF(2)");
  anf_cmd->add_option("--notation", o.notation)->check(notation_names)->capture_default_str();
  add_formula(anf_cmd);

  auto* expand_cmd = app.add_subcommand("expand", "replace quantifiers by finite sums and products");
  expand_cmd->add_option("--domain", o.domain)->check(CLI::PositiveNumber)->required();
  expand_cmd->add_option("--to", o.to)->check(notation_names)->capture_default_str();
  add_formula(expand_cmd);

  auto* sat = app.add_subcommand("sat", "first satisfying structure of a given size");
  sat->add_option("--domain", o.domain)->check(CLI::PositiveNumber)->required();
  add_formula(sat);

  auto* scan = app.add_subcommand("scan", "satisfiability and validity for sizes 1..max");
  scan->add_option("--max", o.max)->check(CLI::PositiveNumber)->capture_default_str();
  add_formula(scan);

  auto* axioms = app.add_subcommand("axioms", "check the number axioms on a structure file");
  axioms->add_option("file", o.file, "structure JSON, or - for standard input")->required();
  axioms->add_flag("--json", o.json, "JSON report");

  auto* pair = app.add_subcommand("pair-check", "ordered-pair injectivity over atoms");
  pair->add_option("--atoms", o.atoms, "comma-separated atom universe for the sweep")->capture_default_str();
  pair->add_option("quad", o.pair_atoms, "four atoms a b c d: compare <a,b> with <c,d>");

  auto* eval = app.add_subcommand("eval", "evaluate a relational formula in a structure");
  eval->add_option("--structure", o.structure, "structure JSON file, or -")->required();
  add_formula(eval);

  std::ostringstream buffer;
  auto finish = [&](int code) {
    if (code != kExitUsage) out << buffer.str();
    return code;
  };

  try {
    auto shielded = shield_formulas(args);
    std::vector<std::string> reversed(shielded.rbegin(), shielded.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kExitUsage;
  }

  try {
    int code = kExitOk;
    if (*translate)
      code = cmd_translate(o, in, buffer);
    else if (*table)
      code = cmd_table(o, in, buffer);
    else if (*taut)
      code = cmd_taut(o, in, buffer);
    else if (*connectives)
      code = cmd_connectives(buffer);
    else if (*anf_cmd)
      code = cmd_anf(o, in, buffer);
    else if (*expand_cmd)
      code = cmd_expand(o, in, buffer);
    else if (*sat)
      code = cmd_sat(o, in, buffer);
    else if (*scan)
      code = cmd_scan(o, in, buffer);
    else if (*axioms)
      code = cmd_axioms(o, in, buffer);
    else if (*pair)
      code = cmd_pair_check(o, buffer);
    else if (*eval)
      code = cmd_eval(o, in, buffer);
    return finish(code);
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return finish(kExitLimit);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return finish(kExitUsage);
}

}  // namespace illation::cli
