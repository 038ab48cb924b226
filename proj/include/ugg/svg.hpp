#pragma once

// SVG drawings of hosts, optionally with an embedded input graph on top.
//
// Universal hosts: schematic layout puts vertex i at column i and row equal
// to its rank in the height order; edges of the binary tree are straight and
// every other edge is an arc. The exact layout uses realized coordinates with
// y log-compressed for display. Convex hosts go on a circle.
//
// Host edges carry class="edge", host vertices class="vertex"; the overlay
// uses class="image-edge" and class="image-vertex".

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ugg/convex.hpp"
#include "ugg/error.hpp"
#include "ugg/geometry.hpp"
#include "ugg/trees.hpp"
#include "ugg/ugraph.hpp"

namespace ugg {

enum class Layout { schematic, exact };

inline constexpr Index kExactLayoutCap = 31;

/// Input graph drawn over the host through a vertex map.
struct Overlay {
  std::vector<Index> map;
  const Graph* input = nullptr;  // edges are drawn only when present
};

namespace svg {

struct XY {
  double x = 0;
  double y = 0;
};

class Canvas {
 public:
  Canvas(double width, double height) : width_(width), height_(height) {}

  void line(XY a, XY b, const char* cls) {
    body_ << "  <path class=\"" << cls << "\" d=\"M " << a.x << ' ' << a.y << " L " << b.x << ' ' << b.y << "\"/>\n";
  }
  void arc(XY a, XY b, double bend, const char* cls) {
    const double mx = (a.x + b.x) / 2, my = (a.y + b.y) / 2;
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len = std::max(std::hypot(dx, dy), 1e-9);
    const XY c{mx - dy / len * bend, my + dx / len * bend};
    body_ << "  <path class=\"" << cls << "\" d=\"M " << a.x << ' ' << a.y << " Q " << c.x << ' ' << c.y << ' ' << b.x
          << ' ' << b.y << "\"/>\n";
  }
  void vertex(XY p, double r, const std::string& label, const char* cls) {
    body_ << "  <circle class=\"" << cls << "\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << r << "\"/>\n";
    body_ << "  <text x=\"" << p.x << "\" y=\"" << p.y + r / 2 << "\">" << label << "</text>\n";
  }

  std::string str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
        << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
        << "  <style>\n"
        << "    .edge { fill: none; stroke: #9aa0a6; stroke-width: 1; }\n"
        << "    .image-edge { fill: none; stroke: #d93025; stroke-width: 2.5; }\n"
        << "    .vertex { fill: #ffffff; stroke: #202124; }\n"
        << "    .image-vertex { fill: #fce8e6; stroke: #d93025; stroke-width: 2; }\n"
        << "    text { font: 10px sans-serif; text-anchor: middle; }\n"
        << "  </style>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  double width_;
  double height_;
  std::ostringstream body_;
};

inline void draw_overlay(Canvas& canvas, const std::vector<XY>& at, const Overlay* overlay, double r) {
  if (!overlay) return;
  auto place = [&](Index v) -> const XY* {
    if (v < 0 || v >= static_cast<Index>(overlay->map.size())) return nullptr;
    const Index g = overlay->map[static_cast<std::size_t>(v)];
    if (g < 0 || g >= static_cast<Index>(at.size())) return nullptr;
    return &at[static_cast<std::size_t>(g)];
  };
  if (overlay->input) {
    for (const InputEdge& e : overlay->input->edges()) {
      const XY* a = place(e.u);
      const XY* b = place(e.v);
      if (a && b) canvas.line(*a, *b, "image-edge");
    }
  }
  for (std::size_t v = 0; v < overlay->map.size(); ++v)
    if (const XY* p = place(static_cast<Index>(v)))
      canvas.vertex(*p, r * 1.2, std::to_string(v), "image-vertex");
}

}  // namespace svg

inline std::string render_svg(const UniversalGraph& host, Layout layout, const Overlay* overlay = nullptr) {
  const Index n = host.size();
  if (layout == Layout::exact)
    detail::require(n <= kExactLayoutCap, ErrorKind::SizeTooLarge,
                    "exact layout capped at n=" + std::to_string(kExactLayoutCap));
  const double step = n <= 63 ? 36.0 : 12.0;
  const double margin = 30.0;
  const double r = step / 3.5;
  std::vector<svg::XY> at(static_cast<std::size_t>(n));
  double height = 0;

  if (layout == Layout::schematic) {
    std::vector<Index> order(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](Index a, Index b) { return host.higher(a, b); });
    for (Index rank = 0; rank < n; ++rank)
      at[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = {
          margin + step * static_cast<double>(order[static_cast<std::size_t>(rank)]),
          margin + step * static_cast<double>(rank)};
    height = 2 * margin + step * static_cast<double>(n);
  } else {
    const CoordinateRealization coords = realize_coordinates(host.shape(), n);
    double top = 0;
    std::vector<double> lifted(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      lifted[static_cast<std::size_t>(i)] = std::log2(1.0 + coords[i].y.convert_to<double>());
      top = std::max(top, lifted[static_cast<std::size_t>(i)]);
    }
    height = 2 * margin + step * std::max<double>(6.0, static_cast<double>(n) / 2);
    const double usable = height - 2 * margin;
    for (Index i = 0; i < n; ++i)
      at[static_cast<std::size_t>(i)] = {margin + step * static_cast<double>(i),
                                         height - margin - (top > 0 ? lifted[static_cast<std::size_t>(i)] / top : 0) * usable};
  }

  svg::Canvas canvas(2 * margin + step * static_cast<double>(std::max<Index>(n - 1, 1)), height);
  const BTreeShape& shape = host.shape();
  for (const Edge& e : host.edges()) {
    const svg::XY a = at[static_cast<std::size_t>(e.u)];
    const svg::XY b = at[static_cast<std::size_t>(e.v)];
    const auto parent = shape.nav(e.v).parent;
    const bool tree_edge = parent && *parent == e.u;
    if (layout == Layout::exact || tree_edge)
      canvas.line(a, b, "edge");
    else
      canvas.arc(a, b, step * 0.6, "edge");
  }
  for (Index i = 0; i < n; ++i) canvas.vertex(at[static_cast<std::size_t>(i)], r, std::to_string(i), "vertex");
  svg::draw_overlay(canvas, at, overlay, r);
  return canvas.str();
}

inline std::string render_svg(const ConvexHost& host, const Overlay* overlay = nullptr) {
  const Index n = host.size();
  const double radius = std::max(120.0, 14.0 * static_cast<double>(n) / std::numbers::pi);
  const double margin = 30.0;
  const double r = std::clamp(radius * std::numbers::pi / static_cast<double>(std::max<Index>(n, 1)) / 2.5, 2.0, 12.0);
  const double centre = margin + radius;
  std::vector<svg::XY> at(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    // Counterclockwise from the rightmost point; screen y grows downward.
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    at[static_cast<std::size_t>(i)] = {centre + radius * std::cos(t), centre - radius * std::sin(t)};
  }
  svg::Canvas canvas(2 * centre, 2 * centre);
  for (const Edge& e : host.edges())
    canvas.line(at[static_cast<std::size_t>(e.u)], at[static_cast<std::size_t>(e.v)], "edge");
  for (Index i = 0; i < n; ++i) canvas.vertex(at[static_cast<std::size_t>(i)], r, std::to_string(i), "vertex");
  svg::draw_overlay(canvas, at, overlay, r);
  return canvas.str();
}

}  // namespace ugg
