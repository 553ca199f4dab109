#include "vmc/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vmc {

namespace {

constexpr double pi = 3.14159265358979323846;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Point {
  double x = 0.0, y = 0.0;
};

std::string svg_open(const RenderOptions& o) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(o.width) + "\" height=\"" +
         num(o.height) + "\" viewBox=\"0 0 " + num(o.width) + " " + num(o.height) + "\">\n" +
         "<rect x=\"0\" y=\"0\" width=\"" + num(o.width) + "\" height=\"" + num(o.height) +
         "\" fill=\"#ffffff\"/>\n";
}

std::string line_tag(Point a, Point b) {
  return "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" +
         num(b.y) + "\"/>\n";
}

std::string cubic_tag(Point p0, Point c1, Point c2, Point p1) {
  return "<path d=\"M " + num(p0.x) + " " + num(p0.y) + " C " + num(c1.x) + " " + num(c1.y) +
         ", " + num(c2.x) + " " + num(c2.y) + ", " + num(p1.x) + " " + num(p1.y) + "\"/>\n";
}

std::string text_tag(Point at, const std::string& body) {
  return "<text x=\"" + num(at.x) + "\" y=\"" + num(at.y) + "\">" + body + "</text>\n";
}

std::string legend_tag(const RenderOptions& o, const std::set<Pair>& classical) {
  std::string body = "classical:";
  for (const auto& [a, b] : classical)
    body += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (classical.empty()) body += " none";
  return "<text x=\"16.00\" y=\"" + num(o.height - 16.0) + "\" font-family=\"monospace\" font-size=\"" +
         num(o.label_font_size) + "\" fill=\"#000000\">" + body + "</text>\n";
}

}  // namespace

std::string render_petal_svg(const PetalDiagram& diagram, const RenderOptions& o) {
  const PetalVerdict verdict = validate_petal(diagram);
  if (!verdict.valid) {
    std::string what = "invalid petal diagram";
    for (const auto& problem : verdict.problems) what += "; " + problem;
    throw std::invalid_argument(what);
  }

  const int m = diagram.petals;
  const double cx = o.width / 2.0, cy = o.height / 2.0;
  const double radius = 0.36 * (o.width < o.height ? o.width : o.height);
  const double label_radius = 1.12 * radius;
  const double control_radius = 1.50 * radius;
  // Chord endpoints sit at 2m circle positions; position j is at angle
  // j*pi/m, clockwise on screen since y grows downward.
  auto at = [&](int position, double r) {
    const double angle = position * pi / m;
    return Point{cx + r * std::cos(angle), cy + r * std::sin(angle)};
  };

  std::string svg = svg_open(o);
  svg += "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"" + num(o.stroke_width) +
         "\" stroke-linecap=\"round\">\n";
  for (int k = 1; k <= m; ++k) svg += line_tag(at(k - 1 + m, radius), at(k - 1, radius));
  // The loop after segment k joins that segment's exit position u_k to the
  // next segment's entry position u_k + 1.
  std::string marker;
  for (int k = 1; k <= m; ++k) {
    const int u = direction_index(k, m);
    const Point p0 = at(u, radius), c1 = at(u, control_radius);
    const Point c2 = at(u + 1, control_radius), p1 = at(u + 1, radius);
    svg += cubic_tag(p0, c1, c2, p1);
    if (k == m && o.start_marker) {
      const Point mid{(p0.x + 3 * c1.x + 3 * c2.x + p1.x) / 8.0,
                      (p0.y + 3 * c1.y + 3 * c2.y + p1.y) / 8.0};
      marker = "<circle cx=\"" + num(mid.x) + "\" cy=\"" + num(mid.y) + "\" r=\"" +
               num(3.0 * o.stroke_width) + "\" fill=\"#000000\"/>\n";
    }
  }
  svg += "</g>\n";
  svg += marker;

  svg += "<g font-family=\"monospace\" font-size=\"" + num(o.label_font_size) +
         "\" fill=\"#000000\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
  for (int k = 1; k <= m; ++k) {
    const std::string rank = std::to_string(diagram.heights[k - 1]);
    svg += text_tag(at(k - 1, label_radius), rank);
    if (o.labels_at_both_ends) svg += text_tag(at(k - 1 + m, label_radius), rank);
  }
  svg += "</g>\n";

  if (o.legend) svg += legend_tag(o, diagram.classical_pairs);
  svg += "</svg>\n";
  return svg;
}

std::string render_crossing_svg(const MulticrossingSpec& spec, const RenderOptions& o) {
  const CrossingVerdict verdict = validate_crossing(spec);
  if (!verdict.valid) throw std::invalid_argument("invalid multicrossing");

  const int n = spec.n;
  const double x0 = 0.15 * o.width, x1 = 0.85 * o.width;
  const double ytop = 0.2 * o.height;
  const double dy = 0.6 * o.height / (n - 1);
  auto strand_y = [&](int position) { return ytop + (spec.heights[position - 1] - 1) * dy; };

  std::string svg = svg_open(o);
  svg += "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"" + num(o.stroke_width) +
         "\" stroke-linecap=\"round\">\n";
  for (int i = 1; i <= n; ++i) svg += line_tag({x0, strand_y(i)}, {x1, strand_y(i)});
  const auto virtuals = spec.virtual_pairs();
  const int arc_slots = static_cast<int>(virtuals.size()) + 1;
  int slot = 1;
  for (const auto& [a, b] : virtuals) {
    const double x = x0 + slot * (x1 - x0) / arc_slots;
    const double bulge = 0.05 * o.width;
    svg += cubic_tag({x, strand_y(a)}, {x + bulge, strand_y(a)}, {x + bulge, strand_y(b)},
                     {x, strand_y(b)});
    ++slot;
  }
  svg += "</g>\n";

  svg += "<g font-family=\"monospace\" font-size=\"" + num(o.label_font_size) +
         "\" fill=\"#000000\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
  for (int i = 1; i <= n; ++i)
    svg += text_tag({0.10 * o.width, strand_y(i)}, std::to_string(i));
  svg += "</g>\n";

  if (o.legend) svg += legend_tag(o, spec.classical_pairs);
  svg += "</svg>\n";
  return svg;
}

}  // namespace vmc
