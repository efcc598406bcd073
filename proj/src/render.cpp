#include "permdual/render.hpp"

#include <cmath>
#include <sstream>

namespace permdual {

std::string graph_to_dot(const LabeledMultigraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (int v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (int k = 1; k <= g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << k << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string edge_digraph_to_dot(const EdgeDigraph& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (int v = 1; v <= d.node_count; ++v) out << "  " << v << ";\n";
  for (const auto& [a, b] : d.arcs) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSize = 520.0;
constexpr double kRadius = 220.0;

struct Point {
  double x, y;
};

// Point k sits at angle -2*pi*k/n from the top, so labels run clockwise.
Point circle_point(int k, int n, double radius) {
  double angle = kPi / 2.0 - 2.0 * kPi * k / n;
  return {kSize / 2.0 + radius * std::cos(angle), kSize / 2.0 - radius * std::sin(angle)};
}

void circled_label(std::ostringstream& out, double x, double y, int label) {
  out << "  <circle cx=\"" << x << "\" cy=\"" << y
      << "\" r=\"11\" fill=\"white\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << x << "\" y=\"" << y + 4.5
      << "\" text-anchor=\"middle\" font-size=\"12\">" << label << "</text>\n";
}

}  // namespace

std::string chord_diagram_to_svg(const CircleChordDiagram& d, const LabeledMultigraph* dual) {
  int n = d.point_count();
  std::ostringstream out;
  out.precision(2);
  out << std::fixed;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
      << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  out << "  <circle cx=\"" << kSize / 2 << "\" cy=\"" << kSize / 2 << "\" r=\"" << kRadius
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 1; k <= d.chord_count(); ++k) {
    const Chord& c = d.chord(k);
    Point pa = circle_point(c.a, n, kRadius);
    Point pb = circle_point(c.b, n, kRadius);
    out << "  <line x1=\"" << pa.x << "\" y1=\"" << pa.y << "\" x2=\"" << pb.x
        << "\" y2=\"" << pb.y << "\" stroke=\"black\"/>\n";
    circled_label(out, (pa.x + pb.x) / 2, (pa.y + pb.y) / 2, k);
  }
  if (dual) {
    // Region k sits near arc k, i.e. halfway between points k-1 and k.
    auto region_point = [&](int k) {
      double angle = kPi / 2.0 - 2.0 * kPi * (k - 0.5) / n;
      return Point{kSize / 2.0 + 0.82 * kRadius * std::cos(angle),
                   kSize / 2.0 - 0.82 * kRadius * std::sin(angle)};
    };
    for (int k = 1; k <= dual->edge_count(); ++k) {
      const Edge& e = dual->edge(k);
      Point pa = region_point(e.u);
      Point pb = region_point(e.v);
      out << "  <line x1=\"" << pa.x << "\" y1=\"" << pa.y << "\" x2=\"" << pb.x
          << "\" y2=\"" << pb.y
          << "\" stroke=\"steelblue\" stroke-dasharray=\"6,3\"/>\n";
      circled_label(out, (pa.x + pb.x) / 2, (pa.y + pb.y) / 2, k);
    }
    for (int k = 1; k <= dual->vertex_count(); ++k) {
      Point p = region_point(k);
      out << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y
          << "\" r=\"5\" fill=\"steelblue\"/>\n";
      out << "  <text x=\"" << p.x + 9 << "\" y=\"" << p.y + 4
          << "\" font-size=\"13\" fill=\"steelblue\">" << k << "</text>\n";
    }
  }
  for (int k = 1; k <= n; ++k) {
    Point p = circle_point(k, n, kRadius);
    Point label = circle_point(k, n, kRadius + 20);
    out << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"4\"/>\n";
    out << "  <text x=\"" << label.x << "\" y=\"" << label.y + 5
        << "\" text-anchor=\"middle\" font-size=\"15\">" << k << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace permdual
