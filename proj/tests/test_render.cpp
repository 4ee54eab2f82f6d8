#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balviz/layout.hpp"
#include "balviz/render.hpp"
#include "balviz/spectral.hpp"
#include "balviz/synth.hpp"

#include <cmath>
#include <map>
#include <regex>
#include <string>
#include <vector>

using namespace balviz;

namespace {

struct SvgEdge {
  int index = 0;
  std::string cls;
  std::string stroke;
  std::vector<double> coords;  // M x y [QL] ... endpoint last
};

std::vector<SvgEdge> scan_edges(const std::string& svg) {
  std::vector<SvgEdge> edges;
  const std::regex edge_re(
      "<path id=\"edge-(\\d+)\" class=\"([a-z_]+)\" d=\"([^\"]+)\" "
      "fill=\"none\" stroke=\"(#[0-9a-fA-F]{6})\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), edge_re);
       it != std::sregex_iterator(); ++it) {
    SvgEdge e;
    e.index = std::stoi((*it)[1]);
    e.cls = (*it)[2];
    e.stroke = (*it)[4];
    const std::string d = (*it)[3];
    const std::regex num_re("-?\\d+\\.?\\d*");
    for (auto nit = std::sregex_iterator(d.begin(), d.end(), num_re);
         nit != std::sregex_iterator(); ++nit) {
      e.coords.push_back(std::stod(nit->str()));
    }
    edges.push_back(e);
  }
  return edges;
}

std::vector<Point> scan_nodes(const std::string& svg) {
  std::map<int, Point> by_index;
  const std::regex node_re(
      "<circle id=\"node-(\\d+)\" cx=\"([-0-9.]+)\" cy=\"([-0-9.]+)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), node_re);
       it != std::sregex_iterator(); ++it) {
    by_index[std::stoi((*it)[1])] = {std::stod((*it)[2]), std::stod((*it)[3])};
  }
  std::vector<Point> nodes;
  for (const auto& [index, p] : by_index) {
    REQUIRE(index == static_cast<int>(nodes.size()));
    nodes.push_back(p);
  }
  return nodes;
}

LayoutModel layout_of(const SignedGraph& g, const Measure* mu = nullptr) {
  return compute_layout(g, smallest_eigenpair(signed_laplacian(g)), mu);
}

SignedGraph sample_graph() {
  GenParams p;
  p.n = 16;
  p.delta = 0.4;
  p.nu = 0.3;
  p.seed = 11;
  return generate(p).graph;
}

}  // namespace

TEST_CASE("render spec validation") {
  RenderSpec bad;
  bad.width = 60;
  bad.margin = 40;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  RenderSpec color;
  color.color_positive = "blue";
  CHECK_THROWS_AS(validate(color), std::invalid_argument);
  color.color_positive = "#12345";
  CHECK_THROWS_AS(validate(color), std::invalid_argument);
  color.color_positive = "#1f77b4";
  CHECK_NOTHROW(validate(color));
}

TEST_CASE("same input renders byte-identically") {
  const SignedGraph g = sample_graph();
  const LayoutModel m = layout_of(g);
  RenderSpec spec;
  CHECK(render_svg(m, g, spec) == render_svg(m, g, spec));
  spec.bundling = true;
  CHECK(render_svg(m, g, spec) == render_svg(m, g, spec));
}

TEST_CASE("edge elements match classes, colors and node coordinates") {
  const SignedGraph g = sample_graph();
  const LayoutModel m = layout_of(g);
  const RenderSpec spec;
  const std::string svg = render_svg(m, g, spec);

  const std::vector<Point> drawn = scan_nodes(svg);
  const std::vector<Point> expected = node_positions(m, spec);
  REQUIRE(drawn.size() == expected.size());
  for (size_t u = 0; u < drawn.size(); ++u) {
    CHECK(std::abs(drawn[u].x - expected[u].x) <= 0.01);
    CHECK(std::abs(drawn[u].y - expected[u].y) <= 0.01);
  }

  const std::vector<SvgEdge> edges = scan_edges(svg);
  REQUIRE(edges.size() == g.edges().size());
  int blue = 0, red = 0;
  for (const SvgEdge& e : edges) {
    CHECK(e.cls == to_string(m.edge_class[static_cast<size_t>(e.index)]));
    const SignedEdge& ge = g.edges()[static_cast<size_t>(e.index)];
    if (e.stroke == spec.color_positive) ++blue;
    if (e.stroke == spec.color_negative) ++red;

    REQUIRE(e.coords.size() == 4);  // straight segment: M x1 y1 L x2 y2
    const Point a = expected[static_cast<size_t>(ge.u)];
    const Point b = expected[static_cast<size_t>(ge.v)];
    CHECK(std::abs(e.coords[0] - a.x) <= 0.01);
    CHECK(std::abs(e.coords[1] - a.y) <= 0.01);
    CHECK(std::abs(e.coords[2] - b.x) <= 0.01);
    CHECK(std::abs(e.coords[3] - b.y) <= 0.01);

    for (double c : e.coords) {
      CHECK(c >= 0.0);
    }
    CHECK(e.coords[0] <= spec.width);
    CHECK(e.coords[1] <= spec.height);
  }
  CHECK(blue == g.positive_edge_count());
  CHECK(red == g.negative_edge_count());
}

TEST_CASE("balanced rendering keeps blue on one side of the y-axis") {
  GenParams p;
  p.n = 14;
  p.delta = 0.4;
  p.nu = 0.0;
  p.seed = 4;
  const SignedGraph g = generate(p).graph;
  const LayoutModel m = layout_of(g);
  const RenderSpec spec;
  const std::string svg = render_svg(m, g, spec);
  const double axis_x = spec.width / 2.0;

  for (const SvgEdge& e : scan_edges(svg)) {
    REQUIRE(e.coords.size() == 4);
    if (e.stroke == spec.color_positive) {
      // both endpoints strictly on one side
      CHECK((e.coords[0] - axis_x) * (e.coords[2] - axis_x) > 0.0);
    } else {
      // negative edges span the axis
      CHECK((e.coords[0] - axis_x) * (e.coords[2] - axis_x) < 0.0);
    }
  }
}

TEST_CASE("axis is horizontal without a measure and tilts with one") {
  const SignedGraph g = sample_graph();
  const std::regex axis_re(
      "<line id=\"axis-x\" x1=\"([-0-9.]+)\" y1=\"([-0-9.]+)\" "
      "x2=\"([-0-9.]+)\" y2=\"([-0-9.]+)\"");

  SUBCASE("no measure: exactly horizontal") {
    const LayoutModel m = layout_of(g);
    const std::string svg = render_svg(m, g);
    std::smatch match;
    REQUIRE(std::regex_search(svg, match, axis_re));
    CHECK(match[2] == match[4]);
    CHECK(axis_tilt_radians(m, RenderSpec{}) == 0.0);
  }

  SUBCASE("size measure: tilted, capped by max_tilt_degrees") {
    const Measure mu = measure_by_name("size");
    const LayoutModel m = layout_of(g, &mu);
    REQUIRE(m.gamma.has_value());
    if (*m.gamma != 0.0) {
      const RenderSpec spec;
      const std::string svg = render_svg(m, g, spec);
      std::smatch match;
      REQUIRE(std::regex_search(svg, match, axis_re));
      CHECK(match[2] != match[4]);
      const double tilt = axis_tilt_radians(m, spec);
      CHECK(std::abs(tilt) <= spec.max_tilt_degrees * M_PI / 180.0 + 1e-12);
    }
  }

  SUBCASE("gamma at the scale reference hits the cap exactly") {
    LayoutModel m = layout_of(g);
    m.gamma = 6.0;
    m.gamma_scale = 6.0;
    RenderSpec spec;
    const double expected = spec.max_tilt_degrees * M_PI / 180.0;
    CHECK(axis_tilt_radians(m, spec) == doctest::Approx(expected).epsilon(1e-12));
    m.gamma = 60.0;  // beyond the reference: clamped
    CHECK(axis_tilt_radians(m, spec) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("bundling displaces control points by class") {
  const SignedGraph g = sample_graph();
  const LayoutModel m = layout_of(g);
  RenderSpec spec;
  spec.bundling = true;
  const std::string svg = render_svg(m, g, spec);
  const std::vector<Point> nodes = node_positions(m, spec);
  const double axis_x = spec.width / 2.0;

  int checked = 0;
  for (const SvgEdge& e : scan_edges(svg)) {
    REQUIRE(e.coords.size() == 6);  // M x1 y1 Q cx cy x2 y2
    const double x1 = e.coords[0], y1 = e.coords[1];
    const double cx = e.coords[2], cy = e.coords[3];
    const double x2 = e.coords[4], y2 = e.coords[5];
    const double mx = (x1 + x2) / 2.0, my = (y1 + y2) / 2.0;
    const double len = std::hypot(x2 - x1, y2 - y1);
    if (len < 1.0) continue;
    ++checked;
    if (e.cls == "positive_external") {
      CHECK(cy < my);  // up
    } else if (e.cls == "negative_external") {
      CHECK(cy > my);  // down
    } else if (e.cls == "positive_internal") {
      CHECK(std::abs(cx - axis_x) > std::abs(mx - axis_x) - 0.02);  // away
      CHECK(cy == doctest::Approx(my).epsilon(1e-9));
    } else if (e.cls == "negative_internal" && std::abs(mx - axis_x) > 1.0) {
      CHECK(std::abs(cx - axis_x) < std::abs(mx - axis_x) + 0.02);  // toward
    }
    // control points stay on canvas
    CHECK(cx >= 0.0);
    CHECK(cx <= spec.width);
    CHECK(cy >= 0.0);
    CHECK(cy <= spec.height);
  }
  CHECK(checked > 0);
  (void)nodes;
}

TEST_CASE("lambda label formatting and visibility") {
  const SignedGraph g(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
  const LayoutModel m = layout_of(g);

  RenderSpec spec;
  std::string svg = render_svg(m, g, spec);
  CHECK(svg.find("id=\"lambda-label\"") != std::string::npos);
  CHECK(svg.find(">y = 1<") != std::string::npos);  // lambda exactly 1

  spec.show_lambda_label = false;
  svg = render_svg(m, g, spec);
  CHECK(svg.find("lambda-label") == std::string::npos);

  // four significant digits for non-integral values
  LayoutModel fractional = m;
  fractional.lambda_label = 0.07626160494;
  spec.show_lambda_label = true;
  svg = render_svg(fractional, g, spec);
  CHECK(svg.find(">y = 0.07626<") != std::string::npos);
}

TEST_CASE("inconsistent layout and graph are rejected") {
  const SignedGraph g = sample_graph();
  const SignedGraph other(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
  const LayoutModel m = layout_of(g);
  CHECK_THROWS_AS(render_svg(m, other, RenderSpec{}), std::invalid_argument);
}

TEST_CASE("all drawn coordinates stay inside the canvas") {
  const SignedGraph g = sample_graph();
  const Measure mu = measure_by_name("size");
  const LayoutModel m = layout_of(g, &mu);
  RenderSpec spec;
  spec.width = 300;
  spec.height = 120;
  spec.margin = 20;
  spec.bundling = true;
  const std::string svg = render_svg(m, g, spec);

  const std::regex num_attr_re("(x1|x2|cx)=\"([-0-9.]+)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), num_attr_re);
       it != std::sregex_iterator(); ++it) {
    const double v = std::stod((*it)[2]);
    CHECK(v >= 0.0);
    CHECK(v <= spec.width);
  }
  const std::regex y_attr_re("(y1|y2|cy)=\"([-0-9.]+)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), y_attr_re);
       it != std::sregex_iterator(); ++it) {
    const double v = std::stod((*it)[2]);
    CHECK(v >= 0.0);
    CHECK(v <= spec.height);
  }
}

TEST_CASE("edges are drawn grouped by class in declaration order") {
  const SignedGraph g = sample_graph();
  const LayoutModel m = layout_of(g);
  const std::string svg = render_svg(m, g);
  const std::vector<SvgEdge> edges = scan_edges(svg);
  int last_rank = -1;
  int last_index = -1;
  for (const SvgEdge& e : edges) {
    const int rank =
        static_cast<int>(*edge_class_from_string(e.cls));
    CHECK(rank >= last_rank);
    if (rank != last_rank) last_index = -1;
    CHECK(e.index > last_index);
    last_rank = rank;
    last_index = e.index;
  }
}
