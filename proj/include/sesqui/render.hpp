#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"
#include "sesqui/labelling.hpp"
#include "sesqui/notation.hpp"

namespace sesqui {

enum class RenderFormat { Ascii, Svg };

struct RenderSpec {
  RenderFormat format = RenderFormat::Ascii;
  // refuse the projection used from dimension 3 on
  bool exact = false;
  int scale = 40;
};

namespace detail {

// label of x^m_i, empty for unlabelled diagrams
using LabelFn = std::function<std::string(int, int)>;

inline std::string centered(const std::string& s, std::size_t w) {
  if (s.size() >= w) return s;
  std::size_t left = (w - s.size()) / 2;
  return std::string(left, ' ') + s + std::string(w - s.size() - left, ' ');
}

inline std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

inline std::string xml_escape(const std::string& s) {
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

// Label of the strand below level m+1 over the level-m dot i after the first
// `upto` cells of level m+1 (the strand's current label).
inline std::string strand_label(const SimpleDiagram& d, const LabelFn& lab, int m, int i, int upto) {
  std::string cur = lab(m, i);
  if (cur.empty()) return cur;
  for (int j = 1; j <= upto; ++j)
    if (d.parent(m + 1, j) == i) cur = "t(" + lab(m + 1, j) + ")";
  return cur;
}

// Dots on a line; segment labels below, dot labels above.
inline std::string ascii_dim1(const SimpleDiagram& d, const LabelFn& lab, bool labelled) {
  int l = d.length(1);
  std::vector<std::string> seg(static_cast<std::size_t>(l + 1)), dot(static_cast<std::size_t>(l));
  if (labelled) {
    seg[0] = lab(0, 1);
    for (int i = 1; i <= l; ++i) {
      dot[static_cast<std::size_t>(i - 1)] = lab(1, i);
      seg[static_cast<std::size_t>(i)] = "t(" + lab(1, i) + ")";
    }
  }
  std::size_t w = 2;
  for (auto& s : seg) w = std::max(w, s.size() + 2);
  for (auto& s : dot) w = std::max(w, s.size() + 1);
  std::string line, below;
  for (int i = 0; i <= l; ++i) {
    line += std::string(w, '-');
    below += centered(seg[static_cast<std::size_t>(i)], w);
    if (i < l) {
      line += "o";
      below += " ";
    }
  }
  if (!labelled) return line + "\n";
  // dot i sits at column i*w + i-1
  std::string top(line.size() + w, ' ');
  for (int i = 1; i <= l; ++i) {
    std::size_t at = static_cast<std::size_t>(i) * w + static_cast<std::size_t>(i - 1);
    const std::string& name = dot[static_cast<std::size_t>(i - 1)];
    top.replace(at - name.size() / 2, name.size(), name);
  }
  return rstrip(top) + "\n" + line + "\n" + rstrip(below) + "\n";
}

// Strings top to bottom, one row per 2-cell.
inline std::string ascii_dim2(const SimpleDiagram& d, const LabelFn& lab, bool labelled) {
  int a = d.length(1), b = d.length(2);
  std::size_t w = 3;
  if (labelled)
    for (int i = 1; i <= a; ++i)
      for (int j = 0; j <= b; ++j) w = std::max(w, strand_label(d, lab, 1, i, j).size() + 1);
  auto row = [&](int dot) {
    std::string s;
    for (int i = 1; i <= a; ++i) s += centered(i == dot ? "o" : "|", w);
    return s;
  };
  auto names = [&](int upto) {
    std::string s;
    for (int i = 1; i <= a; ++i) s += centered(strand_label(d, lab, 1, i, upto), w);
    return rstrip(s);
  };
  std::ostringstream out;
  if (labelled) out << names(0) << "\n";
  out << rstrip(row(0)) << "\n";
  for (int j = 1; j <= b; ++j) {
    std::string r = row(d.parent(2, j));
    if (labelled) r += "  " + lab(2, j);
    out << rstrip(r) << "\n" << rstrip(row(0)) << "\n";
  }
  if (labelled && b > 0) out << names(b) << "\n";
  if (a == 0) out.str(labelled ? lab(0, 1) + "\n" : std::string("(empty)\n"));
  return out.str();
}

// Every cell a box inside the box of its parent.
inline std::string ascii_boxes(const SimpleDiagram& d, const LabelFn& lab, bool labelled) {
  std::ostringstream out;
  out << print_notation(d) << " (nested boxes)\n";
  std::function<void(int, int, int)> go = [&](int m, int i, int depth) {
    std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    std::string name = hat_cell_name(m, i);
    if (labelled) name += " = " + lab(m, i);
    auto kids = d.fiber_over(m, i);
    if (kids.empty()) {
      out << pad << "[" << name << "]\n";
      return;
    }
    out << pad << "[" << name << "\n";
    for (int c : kids) go(m + 1, c, depth + 1);
    out << pad << "]\n";
  };
  go(0, 1, 0);
  return out.str();
}

inline std::string svg_open(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
         "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) + "\">\n" +
         "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" fill=\"white\"/>\n";
}

inline std::string svg_text(int x, int y, const std::string& s, const char* anchor = "middle") {
  return "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"" +
         anchor + "\">" + xml_escape(s) + "</text>\n";
}

inline std::string svg_dot(int x, int y) {
  return "<circle cx=\"" + std::to_string(x) + "\" cy=\"" + std::to_string(y) + "\" r=\"5\" fill=\"black\"/>\n";
}

inline std::string svg_line(int x1, int y1, int x2, int y2) {
  return "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" + std::to_string(x2) + "\" y2=\"" +
         std::to_string(y2) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

inline std::string svg_dim01(const SimpleDiagram& d, const LabelFn& lab, bool labelled, int s) {
  int l = d.dim() == 0 ? 0 : d.length(1);
  int w = s * (l + 1), h = 2 * s;
  std::string out = svg_open(w, h);
  if (d.dim() == 1) out += svg_line(0, s, w, s);
  for (int i = 1; i <= l; ++i) {
    out += svg_dot(i * s, s);
    if (labelled) out += svg_text(i * s, s - 10, lab(1, i));
  }
  if (labelled) out += svg_text(s / 2, s + 20, lab(0, 1));
  return out + "</svg>\n";
}

inline std::string svg_dim2(const SimpleDiagram& d, const LabelFn& lab, bool labelled, int s) {
  int a = d.length(1), b = d.length(2);
  int w = s * (a + 1) + (labelled ? 2 * s : 0), h = s * (b + 1) + (labelled ? s : 0);
  int top = labelled ? s / 2 : 0;
  std::string out = svg_open(w, h);
  for (int i = 1; i <= a; ++i) {
    out += svg_line(i * s, top, i * s, top + s * (b + 1));
    if (labelled) out += svg_text(i * s, top - 6, strand_label(d, lab, 1, i, 0));
  }
  for (int j = 1; j <= b; ++j) {
    int x = d.parent(2, j) * s, y = top + j * s;
    out += svg_dot(x, y);
    if (labelled) out += svg_text(x + 10, y + 4, lab(2, j), "start");
  }
  if (labelled && a == 0) out += svg_text(w / 2, h / 2, lab(0, 1));
  return out + "</svg>\n";
}

// Nested rectangles; odd levels lay their children out left to right, even
// levels top to bottom.
inline std::string svg_boxes(const SimpleDiagram& d, const LabelFn& lab, bool labelled, int s) {
  struct Box {
    int w = 0, h = 0;
  };
  const int pad = std::max(4, s / 5), head = 16;
  std::map<std::pair<int, int>, Box> size;
  std::function<Box(int, int)> measure = [&](int m, int i) {
    Box bx{s, s / 2 + head};
    auto kids = d.fiber_over(m, i);
    if (!kids.empty()) {
      bool across = (m + 1) % 2 == 1;
      int w = 0, h = 0;
      for (int c : kids) {
        Box k = measure(m + 1, c);
        if (across) {
          w += k.w + pad;
          h = std::max(h, k.h);
        } else {
          h += k.h + pad;
          w = std::max(w, k.w);
        }
      }
      bx.w = std::max(bx.w, w + pad + (across ? 0 : pad));
      bx.h = h + head + pad + (across ? pad : 0);
    }
    size[{m, i}] = bx;
    return bx;
  };
  Box root = measure(0, 1);
  std::string body;
  std::function<void(int, int, int, int)> draw = [&](int m, int i, int x, int y) {
    Box bx = size.at({m, i});
    body += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" + std::to_string(bx.w) +
            "\" height=\"" + std::to_string(bx.h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    std::string name = labelled ? lab(m, i) : hat_cell_name(m, i);
    body += svg_text(x + 4, y + 12, name, "start");
    bool across = (m + 1) % 2 == 1;
    int cx = x + pad, cy = y + head;
    for (int c : d.fiber_over(m, i)) {
      draw(m + 1, c, cx, cy);
      Box k = size.at({m + 1, c});
      if (across)
        cx += k.w + pad;
      else
        cy += k.h + pad;
    }
  };
  draw(0, 1, 1, 1);
  return svg_open(root.w + 2, root.h + 2) + body + "</svg>\n";
}

inline std::string render_impl(const SimpleDiagram& d, const LabelFn& lab, bool labelled, const RenderSpec& spec) {
  int k = d.dim();
  if (k >= 3 && spec.exact) throw Error(ErrorKind::UnsupportedDim, "exact pictures stop at dimension 2");
  if (spec.format == RenderFormat::Svg) {
    if (k <= 1) return svg_dim01(d, lab, labelled, spec.scale);
    if (k == 2) return svg_dim2(d, lab, labelled, spec.scale);
    return svg_boxes(d, lab, labelled, spec.scale);
  }
  if (k == 0) return labelled ? lab(0, 1) + "\n" : std::string("*\n");
  if (k == 1) return ascii_dim1(d, lab, labelled);
  if (k == 2) return ascii_dim2(d, lab, labelled);
  return ascii_boxes(d, lab, labelled);
}

}  // namespace detail

inline std::string render(const SimpleDiagram& d, const RenderSpec& spec = {}) {
  return detail::render_impl(d, [](int, int) { return std::string(); }, false, spec);
}

inline std::string render(const Labelling& l, const RenderSpec& spec = {}) {
  return detail::render_impl(l.diagram, [&](int m, int i) { return l.label(m, i).name(); }, true, spec);
}

}  // namespace sesqui
