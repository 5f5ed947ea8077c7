#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schub/catalog_almostsep.hpp"
#include "schub/catalog_sepdesc.hpp"
#include "schub/constants.hpp"
#include "schub/encoding.hpp"
#include "schub/grid.hpp"
#include "schub/laurent.hpp"

// Pictures of filled puzzles (SVG, TikZ) and a JSON description of the grid.
//
// Geometry: the big triangle has unit side length and row height sqrt(3)/2.
// The rhombus at crossing (p, q) sits in row r = p+q-1 at position i = q; it
// is the up triangle of row r at i together with the down triangle of row r+1
// at i, so drawing each cell's NW, NE and horizontal edges paints every edge
// of the grid exactly once.
namespace schub {

struct RenderContext {
  Rule rule = Rule::SepDesc;
  Theory theory = Theory::H;
  int k = 0, d = 1, n = 0;
};

enum class PieceState { Plain, K, Equivariant };

struct CellLook {
  PieceState up = PieceState::Plain;
  PieceState down = PieceState::Plain;
};

namespace render_detail {

inline bool is_bottom_cell(const PuzzleCell& c) { return c.sw == -1 && c.se == -1; }

inline std::string fug_string(const mpz_class& v) { return v.get_str(); }
inline std::string fug_string(const LaurentPoly& v) { return v.to_string(); }

inline std::string fnum(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

inline std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '%' || c == '&' || c == '#') {
      out += '\\';
      out += c;
    } else if (c == '^') {
      out += "\\^{}";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace render_detail

inline std::string sep_rank_label(int rank, int k) {
  if (rank == k + 1) return "_";
  return std::to_string(rank <= k ? rank : rank - 1);
}

inline std::string sep_pair_label(int code, int k) {
  std::string s;
  for (int r : {sepdesc::pair_lo(code), sepdesc::pair_hi(code)})
    if (r != k + 1) s += sep_rank_label(r, k);
  return s.empty() ? "_" : s;
}

inline std::string asep_mask_label(int mask) {
  if (mask == 0) return "_";
  std::string s;
  for (int i = 0; i < 16; i++)
    if (mask >> i & 1) s += std::to_string(i);
  return s;
}

inline std::string asep_tok_label(int code) {
  return print_nu_tokens({almostsep::tok_decode(code)});
}

// Display string for a diagonal edge (NW/NE/SW/SE labels).
inline std::string edge_label(int code, const RenderContext& ctx) {
  return ctx.rule == Rule::AlmostSep ? asep_mask_label(code) : sep_rank_label(code, ctx.k);
}

// Display string for the bisecting horizontal edge of a rhombus.
inline std::string horiz_label(int code, const RenderContext& ctx) {
  return ctx.rule == Rule::AlmostSep ? asep_tok_label(code) : sep_pair_label(code, ctx.k);
}

// Display string for a bottom edge label.
inline std::string bottom_label(int code, const RenderContext& ctx) {
  return ctx.rule == Rule::AlmostSep ? asep_tok_label(code) : sep_rank_label(code, ctx.k);
}

// Which halves of the cell carry K-specific or equivariant pieces. For the
// separated rule this reads off the label order; for the almost-separated
// rule a half is K-flavored exactly when the cohomology gate rejects it.
inline CellLook classify_cell(const PuzzleCell& c, const RenderContext& ctx) {
  CellLook look;
  bool bottom = render_detail::is_bottom_cell(c);
  if (ctx.rule != Rule::AlmostSep) {
    int beta = ctx.k + 1;
    auto k_up = [&](int nw, int ne) { return nw < ne && nw != beta && ne != beta; };
    if (bottom) {
      if (k_up(c.nw, c.ne)) look.up = PieceState::K;
      return look;
    }
    if (c.horiz == -1) {
      if (c.nw == beta && c.ne == beta) {
        look.up = look.down = PieceState::Equivariant;
      } else if (c.sw == c.nw && c.se == c.ne) {
        look.up = look.down = PieceState::K;  // bounce state of the KT catalog
      }
      return look;
    }
    if (k_up(c.nw, c.ne)) look.up = PieceState::K;
    if (c.sw > c.se && c.sw != beta && c.se != beta) look.down = PieceState::K;
    return look;
  }
  almostsep::HK coh(ctx.k, ctx.d, false);
  NuTok t = almostsep::tok_decode(c.horiz);
  int ch;
  if (!coh.up_gate(t, t.kind == NuTok::Down ? c.ne : c.nw, ch)) look.up = PieceState::K;
  if (!bottom && !coh.down_gate(t, t.kind == NuTok::Up ? c.se : c.sw, ch))
    look.down = PieceState::K;
  return look;
}

inline std::string state_name(const PuzzleCell& c, const RenderContext& ctx) {
  CellLook look = classify_cell(c, ctx);
  if (look.up == PieceState::Equivariant) return "equivariant";
  if (render_detail::is_bottom_cell(c) || c.horiz == -1)
    return look.up == PieceState::K || look.down == PieceState::K ? "k" : "plain";
  if (look.up == PieceState::K && look.down == PieceState::K) return "k-both";
  if (look.up == PieceState::K) return "k-up";
  if (look.down == PieceState::K) return "k-down";
  return "plain";
}

// One color per letter, evenly spaced hues; blanks grey, composite labels dark.
inline int letter_hue(int letter, int d) {
  return int(std::lround(360.0 * letter / double(d + 1))) % 360;
}

inline std::string label_color(const std::string& lab, const RenderContext& ctx) {
  char buf[32];
  if (lab == "_" || lab == "odd" || lab == "even") return "#9aa0a6";
  if (lab.size() == 1 && std::isdigit((unsigned char)lab[0])) {
    std::snprintf(buf, sizeof buf, "hsl(%d,70%%,40%%)", letter_hue(lab[0] - '0', ctx.d));
    return buf;
  }
  if (lab.size() == 2 && (lab[0] == 'v' || lab[0] == '^') &&
      std::isdigit((unsigned char)lab[1])) {
    std::snprintf(buf, sizeof buf, "hsl(%d,70%%,40%%)", letter_hue(lab[1] - '0', ctx.d));
    return buf;
  }
  return "#444444";
}

namespace render_detail {

struct CellGeom {
  double ax, ay;  // apex of the up triangle
  double lx, ly;  // bottom-left corner
  double rx, ry;  // bottom-right corner
  double vx, vy;  // bottom vertex of the down triangle
};

inline CellGeom cell_geom(const PuzzleCell& c, int n) {
  double h = std::sqrt(3.0) / 2.0;
  int r = c.p + c.q - 1, i = c.q;
  double X = (n - r) / 2.0;
  CellGeom g;
  g.ax = X + i - 0.5;
  g.ay = (r - 1) * h;
  g.lx = X + i - 1;
  g.ly = r * h;
  g.rx = X + i;
  g.ry = r * h;
  g.vx = X + i - 0.5;
  g.vy = (r + 1) * h;
  return g;
}

}  // namespace render_detail

// All puzzles in one SVG document, stacked vertically with captions.
template <typename FugT>
std::string svg_of_puzzles(const std::vector<Puzzle<FugT>>& puzzles, const RenderContext& ctx,
                           const std::vector<std::string>& captions) {
  using render_detail::fnum;
  int n = ctx.n;
  double h = std::sqrt(3.0) / 2.0;
  double width = n + 1.2;
  double blockH = n * h + 1.1;
  double height = blockH * double(puzzles.empty() ? 1 : puzzles.size()) + 0.2;
  double scale = 46.0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fnum(width * scale)
     << "\" height=\"" << fnum(height * scale) << "\" viewBox=\"0 0 " << fnum(width) << " "
     << fnum(height) << "\" font-family=\"Helvetica,Arial,sans-serif\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fnum(width) << "\" height=\"" << fnum(height)
     << "\" fill=\"white\"/>\n";

  for (size_t idx = 0; idx < puzzles.size(); idx++) {
    const auto& puz = puzzles[idx];
    os << "<g transform=\"translate(0.6," << fnum(0.85 + blockH * double(idx)) << ")\">\n";
    if (idx < captions.size() && !captions[idx].empty())
      os << "<text x=\"" << fnum(n / 2.0 - 0.5) << "\" y=\"-0.5\" font-size=\"0.3\" fill=\"#222\">"
         << render_detail::xml_escape(captions[idx]) << "</text>\n";

    std::ostringstream fills, lines, texts;
    auto put_edge = [&](double x1, double y1, double x2, double y2, const std::string& lab) {
      std::string col = label_color(lab, ctx);
      lines << "<line x1=\"" << fnum(x1) << "\" y1=\"" << fnum(y1) << "\" x2=\"" << fnum(x2)
            << "\" y2=\"" << fnum(y2) << "\" stroke=\"" << col
            << "\" stroke-width=\"0.045\" stroke-linecap=\"round\"/>\n";
      double fs = lab.size() <= 1 ? 0.28 : lab.size() == 2 ? 0.2 : 0.16;
      texts << "<text x=\"" << fnum((x1 + x2) / 2) << "\" y=\"" << fnum((y1 + y2) / 2)
            << "\" font-size=\"" << fnum(fs)
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"" << col
            << "\" stroke=\"white\" stroke-width=\"0.07\" paint-order=\"stroke\">"
            << render_detail::xml_escape(lab) << "</text>\n";
    };
    auto put_tri = [&](double x1, double y1, double x2, double y2, double x3, double y3,
                       PieceState st) {
      if (st == PieceState::Plain) return;
      const char* fill = st == PieceState::K ? "#f9c8dc" : "#d8d8d8";
      fills << "<polygon points=\"" << fnum(x1) << "," << fnum(y1) << " " << fnum(x2) << ","
            << fnum(y2) << " " << fnum(x3) << "," << fnum(y3) << "\" fill=\"" << fill
            << "\"/>\n";
    };

    for (const PuzzleCell& c : puz.cells) {
      auto g = render_detail::cell_geom(c, n);
      bool bottom = render_detail::is_bottom_cell(c);
      CellLook look = classify_cell(c, ctx);
      put_tri(g.ax, g.ay, g.lx, g.ly, g.rx, g.ry, look.up);
      if (!bottom) put_tri(g.lx, g.ly, g.rx, g.ry, g.vx, g.vy, look.down);
      put_edge(g.ax, g.ay, g.lx, g.ly, edge_label(c.nw, ctx));
      put_edge(g.ax, g.ay, g.rx, g.ry, edge_label(c.ne, ctx));
      if (bottom)
        put_edge(g.lx, g.ly, g.rx, g.ry, bottom_label(c.horiz, ctx));
      else if (c.horiz != -1)
        put_edge(g.lx, g.ly, g.rx, g.ry, horiz_label(c.horiz, ctx));
    }
    os << fills.str() << lines.str() << texts.str();
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// The same stack as TikZ pictures; needs \usepackage{tikz} and xcolor.
template <typename FugT>
std::string tikz_of_puzzles(const std::vector<Puzzle<FugT>>& puzzles, const RenderContext& ctx,
                            const std::vector<std::string>& captions) {
  using render_detail::fnum;
  std::ostringstream os;
  os << "% puzzle pictures; compile inside a document with \\usepackage{tikz}\n";
  for (int l = 0; l <= ctx.d; l++)
    os << "\\definecolor{lab" << l << "}{Hsb}{" << letter_hue(l, ctx.d) << ",0.70,0.55}\n";
  os << "\\definecolor{labblank}{gray}{0.60}\n\\definecolor{labmix}{gray}{0.25}\n";

  auto color_of = [&](const std::string& lab) -> std::string {
    if (lab == "_" || lab == "odd" || lab == "even") return "labblank";
    if (lab.size() == 1 && std::isdigit((unsigned char)lab[0])) return "lab" + lab;
    if (lab.size() == 2 && (lab[0] == 'v' || lab[0] == '^') &&
        std::isdigit((unsigned char)lab[1]))
      return std::string("lab") + lab[1];
    return "labmix";
  };

  int n = ctx.n;
  for (size_t idx = 0; idx < puzzles.size(); idx++) {
    const auto& puz = puzzles[idx];
    if (idx < captions.size() && !captions[idx].empty())
      os << "% " << captions[idx] << "\n";
    os << "\\begin{tikzpicture}[x=1cm,y=-1cm]\n";
    if (idx < captions.size() && !captions[idx].empty())
      os << "\\node[anchor=west,font=\\small] at (0,-0.4) {"
         << render_detail::tex_escape(captions[idx]) << "};\n";
    std::ostringstream fills, edges;
    auto put_edge = [&](double x1, double y1, double x2, double y2, const std::string& lab) {
      edges << "\\draw[line width=1.1pt," << color_of(lab) << "] (" << fnum(x1) << ","
            << fnum(y1) << ") -- (" << fnum(x2) << "," << fnum(y2)
            << ") node[midway,fill=white,inner sep=0.5pt,font=\\tiny,text=" << color_of(lab)
            << "] {" << render_detail::tex_escape(lab) << "};\n";
    };
    auto put_tri = [&](double x1, double y1, double x2, double y2, double x3, double y3,
                       PieceState st) {
      if (st == PieceState::Plain) return;
      fills << "\\fill[" << (st == PieceState::K ? "red!20" : "black!15") << "] (" << fnum(x1)
            << "," << fnum(y1) << ") -- (" << fnum(x2) << "," << fnum(y2) << ") -- (" << fnum(x3)
            << "," << fnum(y3) << ") -- cycle;\n";
    };
    for (const PuzzleCell& c : puz.cells) {
      auto g = render_detail::cell_geom(c, n);
      bool bottom = render_detail::is_bottom_cell(c);
      CellLook look = classify_cell(c, ctx);
      put_tri(g.ax, g.ay, g.lx, g.ly, g.rx, g.ry, look.up);
      if (!bottom) put_tri(g.lx, g.ly, g.rx, g.ry, g.vx, g.vy, look.down);
      put_edge(g.ax, g.ay, g.lx, g.ly, edge_label(c.nw, ctx));
      put_edge(g.ax, g.ay, g.rx, g.ry, edge_label(c.ne, ctx));
      if (bottom)
        put_edge(g.lx, g.ly, g.rx, g.ry, bottom_label(c.horiz, ctx));
      else if (c.horiz != -1)
        put_edge(g.lx, g.ly, g.rx, g.ry, horiz_label(c.horiz, ctx));
    }
    os << fills.str() << edges.str();
    os << "\\end{tikzpicture}\n";
  }
  return os.str();
}

// JSON description of a single filled puzzle.
template <typename FugT>
nlohmann::ordered_json puzzle_json(const Puzzle<FugT>& puz, const RenderContext& ctx) {
  nlohmann::ordered_json j;
  int n = ctx.n;
  j["n"] = n;
  j["rule"] = rule_name(ctx.rule);
  j["theory"] = theory_name(ctx.theory);
  j["k"] = ctx.k;
  j["d"] = ctx.d;

  std::map<std::pair<int, int>, const PuzzleCell*> at;
  for (const PuzzleCell& c : puz.cells) at[{c.p, c.q}] = &c;
  auto side = [&](bool west) {
    std::vector<std::string> out;
    for (int r = 1; r <= n; r++) {
      auto it = at.find(west ? std::pair{r, 1} : std::pair{1, r});
      if (it == at.end()) throw std::logic_error("puzzle is missing a boundary cell");
      out.push_back(edge_label(west ? it->second->nw : it->second->ne, ctx));
    }
    return out;
  };
  j["nw"] = side(true);
  j["ne"] = side(false);
  std::vector<std::string> s;
  for (int code : puz.nu) s.push_back(bottom_label(code, ctx));
  j["s"] = s;

  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const PuzzleCell& c : puz.cells) {
    nlohmann::ordered_json jc;
    jc["p"] = c.p;
    jc["q"] = c.q;
    jc["state"] = state_name(c, ctx);
    jc["nw"] = edge_label(c.nw, ctx);
    jc["ne"] = edge_label(c.ne, ctx);
    if (render_detail::is_bottom_cell(c)) {
      jc["label"] = bottom_label(c.horiz, ctx);
    } else {
      jc["sw"] = edge_label(c.sw, ctx);
      jc["se"] = edge_label(c.se, ctx);
      if (c.horiz != -1) jc["horiz"] = horiz_label(c.horiz, ctx);
    }
    cells.push_back(jc);
  }
  j["cells"] = cells;
  j["charge"] = puz.charge;
  j["fugacity"] = render_detail::fug_string(puz.fug);
  return j;
}

}  // namespace schub
