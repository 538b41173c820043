#include "pingpong/diagram.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace pingpong {

namespace {

constexpr double kCenter = 260.0;
constexpr double kRadius = 180.0;
constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Point {
  double x, y;
};

/// Counterclockwise from the positive x-axis; SVG's y axis points down.
Point on_circle(double turn, double radius) {
  const double angle = 2 * std::numbers::pi * turn;
  return {kCenter + radius * std::cos(angle), kCenter - radius * std::sin(angle)};
}

std::string label(Letter s) {
  std::string g(1, Letter(s.generator(), false).to_char());
  return s.inverted() ? "D(" + g + "⁻¹)" : "D(" + g + ")";
}

}  // namespace

std::string render_svg(const Realization& r, DiagramSummary* summary) {
  const auto& cfg = r.config();
  const ArcIndex index(cfg);
  const int m = index.arc_count();
  DiagramSummary info;
  info.arcs = m;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" viewBox=\"0 0 520 520\">\n";
  svg += "  <defs>\n";
  for (int a = 0; a < cfg.rank; ++a) {
    const char* color = kPalette[a % kPalette.size()];
    svg += "    <marker id=\"arrow" + std::to_string(a) +
           "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" +
           color + "\"/></marker>\n";
  }
  svg += "  </defs>\n";
  svg += "  <circle cx=\"" + num(kCenter) + "\" cy=\"" + num(kCenter) + "\" r=\"" + num(kRadius) +
         "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";

  std::vector<double> mid(m);
  svg += "  <g id=\"domains\">\n";
  for (int p = 0; p < m; ++p) {
    const Letter s = cfg.word[p];
    const CircleInterval& arc = r.arcs()[p];
    const double from = arc.start.get_d();
    const double to = from + arc.length.get_d();
    mid[p] = (from + to) / 2;
    const Point u = on_circle(from, kRadius);
    const Point v = on_circle(to, kRadius);
    const char* color = kPalette[s.generator() % kPalette.size()];
    svg += "    <path d=\"M " + num(u.x) + " " + num(u.y) + " A " + num(kRadius) + " " + num(kRadius) +
           " 0 0 0 " + num(v.x) + " " + num(v.y) + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"7\"" + (s.inverted() ? " stroke-dasharray=\"4 2\"" : "") + "/>\n";
    const Point t = on_circle(mid[p], kRadius + 26);
    svg += "    <text x=\"" + num(t.x) + "\" y=\"" + num(t.y) +
           "\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           label(s) + "</text>\n";
    info.labels.push_back(std::string(1, s.to_char()));
  }
  svg += "  </g>\n";

  const Point base = on_circle(r.basepoint().value().get_d(), kRadius);
  svg += "  <circle id=\"basepoint\" cx=\"" + num(base.x) + "\" cy=\"" + num(base.y) + "\" r=\"3\" fill=\"black\"/>\n";

  svg += "  <g id=\"graphs\">\n";
  for (int a = 0; a < cfg.rank; ++a) {
    const GammaCycle cycle = gamma_graph(cfg, a);
    const char* color = kPalette[a % kPalette.size()];
    const std::size_t len = cycle.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
      const int from = cycle.vertices[i].value;
      const int to = cycle.vertices[(i + 1) % len].value;
      const Point u = on_circle(mid[from], kRadius - 10);
      const Point v = on_circle(mid[to], kRadius - 10);
      // Pull the chord toward the center so that 2-cycles draw as two curves.
      const Point c = on_circle((mid[from] + mid[to]) / 2 + (i % 2 == 0 ? 0.02 : -0.02), kRadius * 0.25);
      svg += "    <path d=\"M " + num(u.x) + " " + num(u.y) + " Q " + num(c.x) + " " + num(c.y) + " " +
             num(v.x) + " " + num(v.y) + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.2\" marker-end=\"url(#arrow" + std::to_string(a) + ")\"/>\n";
      ++info.gamma_edges;
    }
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  if (summary) *summary = std::move(info);
  return svg;
}

}  // namespace pingpong
