#pragma once

#include "balviz/layout.hpp"
#include "balviz/signed_graph.hpp"

#include <string>
#include <vector>

namespace balviz {

struct RenderSpec {
  double width = 900.0;
  double height = 600.0;
  double margin = 40.0;
  double node_radius = 5.0;
  std::string color_positive = "#1f77b4";
  std::string color_negative = "#d62728";
  bool bundling = false;
  double bundle_strength = 0.35;  // control-point offset / segment length
  double max_tilt_degrees = 15.0;
  bool show_lambda_label = true;
};

// Throws std::invalid_argument when the canvas cannot hold the margins or
// a color is not a 6-hex-digit RGB value.
void validate(const RenderSpec& spec);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Canvas position of every node: raw abscissas mapped linearly onto the
// horizontal band, stack indices rising row by row from the x-axis.
std::vector<Point> node_positions(const LayoutModel& layout,
                                  const RenderSpec& spec);

// Axis tilt from gamma: arctan-scaled so |gamma| = gamma_scale maps to the
// maximum tilt, clamped there beyond, and additionally capped so the axis
// stays inside the drawing band. 0 when no measure was supplied.
double axis_tilt_radians(const LayoutModel& layout, const RenderSpec& spec);

// Standalone deterministic SVG 1.1 document. Element order: axes, edges
// sorted by (class, edge index), nodes by index, lambda label last.
// Throws std::invalid_argument when layout and graph sizes disagree.
std::string render_svg(const LayoutModel& layout, const SignedGraph& g,
                       const RenderSpec& spec = {});

}  // namespace balviz
