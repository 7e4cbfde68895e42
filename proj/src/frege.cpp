// Begriffsschrift-style rendering.
//
// Layout, in character cells:
//   atom          "-- a"        a content stroke two cells long, a space, the label
//   negation      "-T" + inner  the T marks the nub hanging below the stroke
//   conditional   "-+" + consequent on the main row; the antecedent hangs from
//                 a vertical stroke in the branch column, joined at "`" (last)
//                 or "+" (stacked). An antecedent that is a product is drawn as
//                 two stacked conditions on the same branch.
// Sums and products elsewhere use their conditional definitions:
//   a + b  =  -a -< b        ab  =  -(a -< -b)
//
// SVG geometry: one cell is kCellWidth x kRowHeight pixels; strokes run through
// the vertical middle of a row.

#include <sstream>
#include <variant>
#include <vector>

#include "illation/detail/overloaded.hpp"
#include "illation/notation.hpp"
#include "illation/truth.hpp"

namespace illation {

namespace {

using detail::overloaded;

constexpr double kCellWidth = 9.0;
constexpr double kRowHeight = 22.0;
constexpr double kNubLength = 7.0;
constexpr double kMargin = 6.0;
constexpr int kFontSize = 14;

struct HLine {
  int row;
  double col0, col1;
};
struct VLine {
  double col;
  int row0, row1;
};
struct Nub {
  int row;
  double col;
};
struct Label {
  int row;
  int col;
  std::string text;
};
using Prim = std::variant<HLine, VLine, Nub, Label>;

struct Block {
  std::vector<std::string> rows;
  std::vector<Prim> prims;
};

void append_shifted(std::vector<Prim>& out, const std::vector<Prim>& in, int drow, int dcol) {
  for (const auto& p : in) {
    out.push_back(std::visit(overloaded{
                                 [&](const HLine& h) -> Prim { return HLine{h.row + drow, h.col0 + dcol, h.col1 + dcol}; },
                                 [&](const VLine& v) -> Prim { return VLine{v.col + dcol, v.row0 + drow, v.row1 + drow}; },
                                 [&](const Nub& n) -> Prim { return Nub{n.row + drow, n.col + dcol}; },
                                 [&](const Label& l) -> Prim { return Label{l.row + drow, l.col + dcol, l.text}; },
                             },
                             p));
  }
}

Block leaf(const std::string& label) {
  return {{"-- " + label}, {HLine{0, 0, 2}, Label{0, 3, label}}};
}

Block layout(const Prop& f);

Block negation(const Block& inner) {
  Block b;
  b.rows.push_back("-T" + inner.rows[0]);
  for (std::size_t i = 1; i < inner.rows.size(); ++i) b.rows.push_back("  " + inner.rows[i]);
  b.prims = {HLine{0, 0, 2}, Nub{0, 1.5}};
  append_shifted(b.prims, inner.prims, 0, 2);
  return b;
}

Block conditional(const Block& consequent, const std::vector<Block>& antecedents) {
  Block b;
  b.rows.push_back("-+" + consequent.rows[0]);
  for (std::size_t i = 1; i < consequent.rows.size(); ++i) b.rows.push_back(" |" + consequent.rows[i]);
  b.prims = {HLine{0, 0, 2}};
  append_shifted(b.prims, consequent.prims, 0, 2);
  int last_join = 0;
  for (std::size_t j = 0; j < antecedents.size(); ++j) {
    const Block& a = antecedents[j];
    bool last = j + 1 == antecedents.size();
    int top = static_cast<int>(b.rows.size());
    b.rows.push_back((last ? " `" : " +") + a.rows[0]);
    for (std::size_t i = 1; i < a.rows.size(); ++i) b.rows.push_back((last ? "  " : " |") + a.rows[i]);
    b.prims.push_back(HLine{top, 1.5, 2});
    append_shifted(b.prims, a.prims, top, 2);
    last_join = top;
  }
  b.prims.push_back(VLine{1.5, 0, last_join});
  return b;
}

Block layout(const Prop& f) {
  return std::visit(
      overloaded{
          [](const prop::Var& v) { return leaf(v.name); },
          [](const prop::Const& c) { return leaf(c.value ? "#t" : "#f"); },
          [](const prop::Neg& n) { return negation(layout(n.inner)); },
          [](const prop::Claw& c) {
            std::vector<Block> ants;
            if (const auto* p = c.antecedent.as<prop::Prod>()) {
              ants.push_back(layout(p->left));
              ants.push_back(layout(p->right));
            } else {
              ants.push_back(layout(c.antecedent));
            }
            return conditional(layout(c.consequent), ants);
          },
          [](const prop::Prod& p) { return layout(prop::neg(prop::claw(p.left, prop::neg(p.right)))); },
          [](const prop::Sum& s) { return layout(prop::claw(prop::neg(s.left), s.right)); },
          [](const prop::Conn16& c) { return layout(connective_expansion(c.index, c.left, c.right)); },
      },
      f.node().value);
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string to_svg(const Block& b) {
  std::size_t width_cells = 0;
  for (const auto& r : b.rows) width_cells = std::max(width_cells, r.size());
  double width = 2 * kMargin + static_cast<double>(width_cells) * kCellWidth;
  double height = 2 * kMargin + static_cast<double>(b.rows.size()) * kRowHeight;
  auto x = [](double col) { return kMargin + col * kCellWidth; };
  auto y = [](int row) { return kMargin + (row + 0.5) * kRowHeight; };

  std::ostringstream strokes, labels;
  for (const auto& p : b.prims) {
    std::visit(overloaded{
                   [&](const HLine& h) {
                     strokes << "    <line x1=\"" << num(x(h.col0)) << "\" y1=\"" << num(y(h.row)) << "\" x2=\""
                             << num(x(h.col1)) << "\" y2=\"" << num(y(h.row)) << "\"/>\n";
                   },
                   [&](const VLine& v) {
                     strokes << "    <line x1=\"" << num(x(v.col)) << "\" y1=\"" << num(y(v.row0)) << "\" x2=\""
                             << num(x(v.col)) << "\" y2=\"" << num(y(v.row1)) << "\"/>\n";
                   },
                   [&](const Nub& n) {
                     strokes << "    <line x1=\"" << num(x(n.col)) << "\" y1=\"" << num(y(n.row)) << "\" x2=\""
                             << num(x(n.col)) << "\" y2=\"" << num(y(n.row) + kNubLength) << "\"/>\n";
                   },
                   [&](const Label& l) {
                     labels << "    <text x=\"" << num(x(l.col)) << "\" y=\"" << num(y(l.row) + kFontSize / 3.0)
                            << "\">" << escape_xml(l.text) << "</text>\n";
                   },
               },
               p);
  }
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
      << "  <g stroke=\"black\" stroke-width=\"1.5\" stroke-linecap=\"square\" fill=\"none\">\n"
      << strokes.str() << "  </g>\n"
      << "  <g font-family=\"monospace\" font-size=\"" << kFontSize << "\" fill=\"black\">\n"
      << labels.str() << "  </g>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_frege(const Prop& f, FregeFormat format) {
  Block b = layout(f);
  if (format == FregeFormat::Svg) return to_svg(b);
  std::string out;
  for (const auto& r : b.rows) out += r + "\n";
  return out;
}

}  // namespace illation
