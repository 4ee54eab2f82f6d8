#pragma once

#include "balviz/signed_graph.hpp"
#include "balviz/spectral.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace balviz {

// Edge classes, in drawing order. An edge is *_internal when both
// endpoints share the same quantized abscissa.
enum class EdgeClass {
  PositiveInternal = 0,
  NegativeInternal = 1,
  PositiveExternal = 2,
  NegativeExternal = 3,
};

const char* to_string(EdgeClass c);
std::optional<EdgeClass> edge_class_from_string(std::string_view s);

// A faction measure: evaluated on a node subset (sorted indices). Must be
// deterministic and map the empty set to 0.
struct Measure {
  std::string name;
  std::function<double(const SignedGraph&, std::span<const int>)> evaluate;
};

// Render-independent layout: abscissa from the eigenvector, stack position
// among equal-abscissa nodes, edge classes, the two factions split by the
// sign of the quantized abscissa, and the optional axis tilt.
struct LayoutModel {
  std::vector<double> x;           // raw eigenvector entries
  std::vector<int> y;              // 0..k-1 within each equal-x group
  std::vector<EdgeClass> edge_class;
  std::vector<int> faction_left;   // quantized x < 0, ascending
  std::vector<int> faction_right;  // quantized x >= 0, ascending
  std::optional<double> gamma;        // mu(C_l) - mu(C_r), when mu given
  std::optional<double> gamma_scale;  // max(mu(C_l), mu(C_r)), tilt reference
  double lambda_label = 0.0;
};

inline constexpr double kDefaultXTolerance = 1e-6;

// Abscissas are compared after quantization to buckets of width
// x_tolerance; analytically equal eigenvector entries otherwise differ at
// machine precision. Throws std::invalid_argument on disconnected input,
// non-positive tolerance, or an eigenvector of the wrong length.
LayoutModel compute_layout(const SignedGraph& g, const SpectralResult& spec,
                           const Measure* mu = nullptr,
                           double x_tolerance = kDefaultXTolerance);

// Per-node +1 (right faction) / -1 (left faction).
std::vector<int> faction_assignment(const LayoutModel& m);

// Built-in faction measures.
double measure_size(const SignedGraph& g, std::span<const int> nodes);
// Average local clustering coefficient of the induced subgraph, signs
// ignored; nodes with induced degree < 2 contribute 0.
double measure_clustering(const SignedGraph& g, std::span<const int> nodes);
// Positive edges inside the set / C(|s|, 2); 0 when |s| < 2.
double measure_pos_density(const SignedGraph& g, std::span<const int> nodes);
// Positive edges inside the set / all edges inside; 0 when none.
double measure_pos_ratio(const SignedGraph& g, std::span<const int> nodes);

// Lookup by name: size, clustering, pos_density, pos_ratio.
// Throws std::invalid_argument on unknown names.
Measure measure_by_name(const std::string& name);

nlohmann::ordered_json to_json(const LayoutModel& m);
LayoutModel layout_from_json(const nlohmann::json& j);

}  // namespace balviz
