#include "balviz/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace balviz {

namespace {

std::string fmt_px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_sig4(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string fmt_plain(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

bool valid_color(const std::string& c) {
  if (c.size() != 7 || c[0] != '#') return false;
  return std::all_of(c.begin() + 1, c.end(), [](char ch) {
    return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f') ||
           (ch >= 'A' && ch <= 'F');
  });
}

constexpr const char kNodeFill[] = "#7f7f7f";
constexpr const char kAxisColor[] = "#000000";

double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

}  // namespace

void validate(const RenderSpec& spec) {
  if (!(spec.width > 2.0 * spec.margin) || !(spec.height > 2.0 * spec.margin)) {
    throw std::invalid_argument("canvas must be larger than twice the margin");
  }
  if (!valid_color(spec.color_positive) || !valid_color(spec.color_negative)) {
    throw std::invalid_argument("colors must be #RRGGBB values");
  }
  if (!(spec.node_radius > 0.0)) {
    throw std::invalid_argument("node_radius must be positive");
  }
  if (!(spec.bundle_strength >= 0.0 && spec.bundle_strength <= 1.0)) {
    throw std::invalid_argument("bundle_strength must lie in [0, 1]");
  }
}

std::vector<Point> node_positions(const LayoutModel& layout,
                                  const RenderSpec& spec) {
  const size_t n = layout.x.size();
  const double axis_x = spec.width / 2.0;
  const double axis_y = spec.height / 2.0;
  const double half_band = spec.width / 2.0 - spec.margin;

  double max_abs = 0.0;
  for (double x : layout.x) max_abs = std::max(max_abs, std::abs(x));

  int max_stack = 0;
  for (int y : layout.y) max_stack = std::max(max_stack, y);
  const double row_step =
      (spec.height / 2.0 - spec.margin) / static_cast<double>(max_stack + 1);

  std::vector<Point> points(n);
  for (size_t u = 0; u < n; ++u) {
    const double t = max_abs > 0.0 ? layout.x[u] / max_abs : 0.0;
    points[u].x = axis_x + t * half_band;
    points[u].y = axis_y - (static_cast<double>(layout.y[u]) + 1.0) * row_step;
  }
  return points;
}

double axis_tilt_radians(const LayoutModel& layout, const RenderSpec& spec) {
  if (!layout.gamma.has_value()) return 0.0;
  const double scale =
      layout.gamma_scale.has_value() ? *layout.gamma_scale : 0.0;
  if (scale <= 0.0) return 0.0;

  const double max_tilt = spec.max_tilt_degrees * std::numbers::pi / 180.0;
  const double raw =
      max_tilt * std::atan(*layout.gamma / scale) / std::atan(1.0);
  double tilt = clamp(raw, -max_tilt, max_tilt);

  // Keep the axis endpoints inside the drawing band.
  const double geometric_cap = std::atan((spec.height / 2.0 - spec.margin) /
                                         (spec.width / 2.0 - spec.margin));
  return clamp(tilt, -geometric_cap, geometric_cap);
}

std::string render_svg(const LayoutModel& layout, const SignedGraph& g,
                       const RenderSpec& spec) {
  validate(spec);
  if (layout.x.size() != static_cast<size_t>(g.node_count()) ||
      layout.edge_class.size() != g.edges().size()) {
    throw std::invalid_argument("layout does not match the graph");
  }

  const std::vector<Point> nodes = node_positions(layout, spec);
  const double axis_x = spec.width / 2.0;
  const double axis_y = spec.height / 2.0;
  const double half_band = spec.width / 2.0 - spec.margin;
  const double tilt = axis_tilt_radians(layout, spec);
  const double rise = std::tan(tilt) * half_band;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt_plain(spec.width) + "\" height=\"" + fmt_plain(spec.height) +
         "\" viewBox=\"0 0 " + fmt_plain(spec.width) + " " +
         fmt_plain(spec.height) + "\">\n";

  // Axes. The x-axis tilts like a scale beam: heavier left side dips.
  svg += "  <line id=\"axis-x\" x1=\"" + fmt_px(axis_x - half_band) +
         "\" y1=\"" + fmt_px(axis_y + rise) + "\" x2=\"" +
         fmt_px(axis_x + half_band) + "\" y2=\"" + fmt_px(axis_y - rise) +
         "\" stroke=\"" + std::string(kAxisColor) +
         "\" stroke-width=\"1\"/>\n";
  svg += "  <line id=\"axis-y\" x1=\"" + fmt_px(axis_x) + "\" y1=\"" +
         fmt_px(spec.margin) + "\" x2=\"" + fmt_px(axis_x) + "\" y2=\"" +
         fmt_px(spec.height - spec.margin) + "\" stroke=\"" +
         std::string(kAxisColor) + "\" stroke-width=\"1\"/>\n";

  // Edges, grouped by class in drawing order, stable by edge index.
  std::vector<size_t> order(g.edges().size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return static_cast<int>(layout.edge_class[a]) <
           static_cast<int>(layout.edge_class[b]);
  });

  for (size_t idx : order) {
    const SignedEdge& e = g.edges()[idx];
    const EdgeClass cls = layout.edge_class[idx];
    const Point a = nodes[static_cast<size_t>(e.u)];
    const Point b = nodes[static_cast<size_t>(e.v)];
    const std::string& color =
        e.sign > 0 ? spec.color_positive : spec.color_negative;

    std::string path;
    if (!spec.bundling) {
      path = "M " + fmt_px(a.x) + " " + fmt_px(a.y) + " L " + fmt_px(b.x) +
             " " + fmt_px(b.y);
    } else {
      const double mx = (a.x + b.x) / 2.0;
      const double my = (a.y + b.y) / 2.0;
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const double offset = spec.bundle_strength * len;
      double cx = mx, cy = my;
      const double away = mx >= axis_x ? 1.0 : -1.0;
      switch (cls) {
        case EdgeClass::PositiveExternal: cy = my - offset; break;
        case EdgeClass::NegativeExternal: cy = my + offset; break;
        case EdgeClass::PositiveInternal: cx = mx + away * offset; break;
        case EdgeClass::NegativeInternal: cx = mx - away * offset; break;
      }
      cx = clamp(cx, 0.0, spec.width);
      cy = clamp(cy, 0.0, spec.height);
      path = "M " + fmt_px(a.x) + " " + fmt_px(a.y) + " Q " + fmt_px(cx) +
             " " + fmt_px(cy) + " " + fmt_px(b.x) + " " + fmt_px(b.y);
    }
    svg += "  <path id=\"edge-" + std::to_string(idx) + "\" class=\"" +
           to_string(cls) + "\" d=\"" + path + "\" fill=\"none\" stroke=\"" +
           color + "\" stroke-width=\"1.5\"/>\n";
  }

  for (size_t u = 0; u < nodes.size(); ++u) {
    svg += "  <circle id=\"node-" + std::to_string(u) + "\" cx=\"" +
           fmt_px(nodes[u].x) + "\" cy=\"" + fmt_px(nodes[u].y) + "\" r=\"" +
           fmt_plain(spec.node_radius) + "\" fill=\"" +
           std::string(kNodeFill) + "\"/>\n";
  }

  if (spec.show_lambda_label) {
    svg += "  <text id=\"lambda-label\" x=\"" + fmt_px(axis_x + 8.0) +
           "\" y=\"" + fmt_px(spec.margin) +
           "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"" +
           std::string(kAxisColor) + "\">y = " +
           fmt_sig4(layout.lambda_label) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace balviz
