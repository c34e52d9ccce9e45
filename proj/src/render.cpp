#include "metallic/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "metallic/errors.hpp"

namespace metallic {

namespace {

struct Segment {
  QuadElement start;
  int exponent;
  char letter;
};

struct Row {
  std::string label;
  std::vector<Segment> segments;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

std::string ordinal(int k) {
  const char* suffix = "th";
  if (k % 100 < 11 || k % 100 > 13) {
    if (k % 10 == 1) suffix = "st";
    if (k % 10 == 2) suffix = "nd";
    if (k % 10 == 3) suffix = "rd";
  }
  return std::to_string(k) + suffix + " removal";
}

std::string superscript(int m) {
  static const char* const kDigits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string digits = std::to_string(m);
  std::string out;
  for (char c : digits) out += kDigits[c - '0'];
  return out;
}

std::string svg_length_label(const MetallicParams& params, int m) {
  if (m == 0) return "1";
  return "1/" + params.symbol() + (m == 1 ? "" : superscript(m));
}

std::string tikz_length_label(const MetallicParams& params, int m) {
  if (m == 0) return "$1$";
  std::string sym = params.tex_symbol();
  if (m == 1) return "$\\frac{1}{" + sym + "}$";
  return "$\\frac{1}{" + sym + "^{" + std::to_string(m) + "}}$";
}

class Layout {
 public:
  Layout(const MetallicParams& params, const RenderPlan& plan) : params_(params), plan_(plan) {}

  double x(const QuadElement& v) const {
    return plan_.margin + (plan_.width - 2.0 * plan_.margin) * to_float(v, 64).to_double();
  }
  double row_y(std::size_t r) const { return 30.0 + plan_.row_height * static_cast<double>(r); }
  double height(std::size_t rows) const { return row_y(rows) - plan_.row_height + 36.0; }

  const MetallicParams& params() const { return params_; }
  const RenderPlan& plan() const { return plan_; }

 private:
  const MetallicParams& params_;
  const RenderPlan& plan_;
};

// Geometry of one row after tick merging and label decluttering.
struct RowGeometry {
  struct Seg {
    double x1, x2;
    char letter;
    int exponent;
    bool show_letter;
    bool show_length;
  };
  std::vector<Seg> segs;
  std::vector<double> ticks;
};

RowGeometry layout_row(const Row& row, const Layout& layout) {
  RowGeometry g;
  double last_letter = -1e300;
  double last_length = -1e300;
  const double spacing = layout.plan().label_spacing;
  bool have_prev = false;
  QuadElement prev_end = QuadElement::zero(layout.params().field());
  for (const Segment& s : row.segments) {
    QuadElement end = s.start + gamma_pow(layout.params().field(), -s.exponent);
    double x1 = layout.x(s.start);
    double x2 = layout.x(end);
    double mid = 0.5 * (x1 + x2);
    if (!have_prev || !(prev_end == s.start)) g.ticks.push_back(x1);
    g.ticks.push_back(x2);
    bool show_letter = layout.plan().tile_letters && mid - last_letter >= spacing;
    bool show_length = layout.plan().length_labels && mid - last_length >= spacing;
    if (show_letter) last_letter = mid;
    if (show_length) last_length = mid;
    g.segs.push_back(RowGeometry::Seg{x1, x2, s.letter, s.exponent, show_letter, show_length});
    prev_end = std::move(end);
    have_prev = true;
  }
  return g;
}

std::string write_svg(const std::vector<Row>& rows, const Layout& layout) {
  const RenderPlan& plan = layout.plan();
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(plan.width)
     << "\" height=\"" << fmt(layout.height(rows.size())) << "\" viewBox=\"0 0 " << fmt(plan.width)
     << " " << fmt(layout.height(rows.size())) << "\" font-family=\"serif\" font-size=\"10\">\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double y = layout.row_y(r);
    const RowGeometry g = layout_row(rows[r], layout);
    os << "<g id=\"row-" << r << "\" class=\"row\" stroke=\"black\">\n";
    os << "<text class=\"row-label\" x=\"" << fmt(plan.margin) << "\" y=\"" << fmt(y - 16.0)
       << "\" stroke=\"none\">" << rows[r].label << "</text>\n";
    for (const auto& s : g.segs) {
      os << "<line class=\"seg\" x1=\"" << fmt(s.x1) << "\" y1=\"" << fmt(y) << "\" x2=\""
         << fmt(s.x2) << "\" y2=\"" << fmt(y) << "\" stroke-width=\"1.5\"/>\n";
    }
    for (double t : g.ticks) {
      os << "<line class=\"tick\" x1=\"" << fmt(t) << "\" y1=\"" << fmt(y - plan.tick_length)
         << "\" x2=\"" << fmt(t) << "\" y2=\"" << fmt(y + plan.tick_length) << "\"/>\n";
    }
    for (const auto& s : g.segs) {
      const double mid = 0.5 * (s.x1 + s.x2);
      if (s.show_letter) {
        os << "<text class=\"letter\" x=\"" << fmt(mid) << "\" y=\"" << fmt(y - 6.0)
           << "\" text-anchor=\"middle\" stroke=\"none\">" << s.letter << "</text>\n";
      }
      if (s.show_length) {
        os << "<text class=\"length\" x=\"" << fmt(mid) << "\" y=\"" << fmt(y + 14.0)
           << "\" text-anchor=\"middle\" stroke=\"none\">"
           << svg_length_label(layout.params(), s.exponent) << "</text>\n";
      }
    }
    if (plan.endpoint_labels) {
      os << "<text class=\"endpoint\" x=\"" << fmt(plan.margin) << "\" y=\"" << fmt(y + 26.0)
         << "\" text-anchor=\"middle\" stroke=\"none\">0</text>\n";
      os << "<text class=\"endpoint\" x=\"" << fmt(plan.width - plan.margin) << "\" y=\""
         << fmt(y + 26.0) << "\" text-anchor=\"middle\" stroke=\"none\">1</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string write_tikz(const std::vector<Row>& rows, const Layout& layout) {
  const RenderPlan& plan = layout.plan();
  std::ostringstream os;
  os << "\\begin{tikzpicture}[x=1pt,y=1pt,seg/.style={thick},tick/.style={thin}]\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double y = -layout.row_y(r);
    const RowGeometry g = layout_row(rows[r], layout);
    os << "% row " << r << ": " << rows[r].label << "\n";
    os << "\\node[anchor=west] at (" << fmt(plan.margin) << "," << fmt(y + 16.0) << ") {"
       << rows[r].label << "};\n";
    for (const auto& s : g.segs) {
      os << "\\draw[seg] (" << fmt(s.x1) << "," << fmt(y) << ") -- (" << fmt(s.x2) << ","
         << fmt(y) << ");\n";
    }
    for (double t : g.ticks) {
      os << "\\draw[tick] (" << fmt(t) << "," << fmt(y + plan.tick_length) << ") -- (" << fmt(t)
         << "," << fmt(y - plan.tick_length) << ");\n";
    }
    for (const auto& s : g.segs) {
      const double mid = 0.5 * (s.x1 + s.x2);
      if (s.show_letter) {
        os << "\\node[above] at (" << fmt(mid) << "," << fmt(y + 2.0) << ") {$" << s.letter
           << "$};\n";
      }
      if (s.show_length) {
        os << "\\node[below] at (" << fmt(mid) << "," << fmt(y - 2.0) << ") {"
           << tikz_length_label(layout.params(), s.exponent) << "};\n";
      }
    }
    if (plan.endpoint_labels) {
      os << "\\node[below] at (" << fmt(plan.margin) << "," << fmt(y - 14.0) << ") {$0$};\n";
      os << "\\node[below] at (" << fmt(plan.width - plan.margin) << "," << fmt(y - 14.0)
         << ") {$1$};\n";
    }
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string write(const std::vector<Row>& rows, const MetallicParams& params,
                  const RenderPlan& plan) {
  const Layout layout(params, plan);
  return plan.format == RenderFormat::kSvg ? write_svg(rows, layout) : write_tikz(rows, layout);
}

void check_budget(std::uint64_t segments, const RenderPlan& plan) {
  if (segments > plan.max_segments) {
    throw Error(ErrorCode::kCapExceeded, "figure would draw " + std::to_string(segments) +
                                             " segments, above the limit of " +
                                             std::to_string(plan.max_segments));
  }
}

Row tiling_row(const Tiling& tiling, std::string label) {
  Row row{std::move(label), {}};
  for (const Tile& t : tiling.tiles) row.segments.push_back(Segment{t.start, t.length_exponent, letter(t.kind)});
  return row;
}

}  // namespace

std::string render_tiling_stack(const MetallicParams& params, int n_max, const RenderPlan& plan) {
  if (n_max < 0) throw Error(ErrorCode::kInvalidArgument, "n_max must be non-negative");
  std::uint64_t total = 0;
  for (int n = 0; n <= n_max; ++n) {
    mpz_class c = tile_counts(params, n).total();
    if (c > mpz_class(std::to_string(plan.max_segments))) {
      check_budget(plan.max_segments + 1, plan);
    }
    total += c.get_ui();
  }
  check_budget(total, plan);

  std::vector<Row> rows;
  for (int n = 0; n <= n_max; ++n) {
    rows.push_back(tiling_row(tiling_at_step(params, n), "step " + std::to_string(n)));
  }
  return write(rows, params, plan);
}

std::string render_construction(const FractalSpec& spec, int k_max, const RenderPlan& plan) {
  if (k_max < 0) throw Error(ErrorCode::kInvalidArgument, "k_max must be non-negative");
  const std::vector<Survivor> surv = survivors(spec);
  const Tiling tiling = tiling_at_step(spec.params, spec.n);

  std::uint64_t total = tiling.tiles.size();
  std::uint64_t per_row = 1;
  for (int k = 1; k <= k_max; ++k) {
    per_row *= surv.size();
    total += per_row;
    check_budget(total, plan);
  }

  std::vector<Row> rows{tiling_row(tiling, "tiling")};
  IntervalCover cover = unit_cover(spec);
  for (int k = 1; k <= k_max; ++k) {
    cover = refine(cover);
    Row row{ordinal(k), {}};
    for (std::size_t i = 0; i < cover.intervals.size(); ++i) {
      // Kind of the survivor this interval descends from at the last level.
      char kind = letter(surv[i % surv.size()].kind);
      row.segments.push_back(Segment{cover.intervals[i].start, cover.intervals[i].length_exponent, kind});
    }
    rows.push_back(std::move(row));
  }
  return write(rows, spec.params, plan);
}

}  // namespace metallic
