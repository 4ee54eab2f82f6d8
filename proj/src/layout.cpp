#include "balviz/layout.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace balviz {

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::PositiveInternal: return "positive_internal";
    case EdgeClass::NegativeInternal: return "negative_internal";
    case EdgeClass::PositiveExternal: return "positive_external";
    case EdgeClass::NegativeExternal: return "negative_external";
  }
  return "unknown";
}

std::optional<EdgeClass> edge_class_from_string(std::string_view s) {
  if (s == "positive_internal") return EdgeClass::PositiveInternal;
  if (s == "negative_internal") return EdgeClass::NegativeInternal;
  if (s == "positive_external") return EdgeClass::PositiveExternal;
  if (s == "negative_external") return EdgeClass::NegativeExternal;
  return std::nullopt;
}

namespace {

long long quantize(double x, double tol) {
  return std::llround(x / tol);
}

}  // namespace

LayoutModel compute_layout(const SignedGraph& g, const SpectralResult& spec,
                           const Measure* mu, double x_tolerance) {
  if (x_tolerance <= 0.0) {
    throw std::invalid_argument("x_tolerance must be positive");
  }
  if (spec.eigenvector.size() != g.node_count()) {
    throw std::invalid_argument("eigenvector length does not match graph");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument(
        "layout requires a connected graph (disconnected input)");
  }

  const int n = g.node_count();
  LayoutModel m;
  m.x.resize(static_cast<size_t>(n));
  m.y.resize(static_cast<size_t>(n));
  m.lambda_label = spec.lambda_min;

  std::vector<long long> bucket(static_cast<size_t>(n));
  std::unordered_map<long long, int> stack_height;
  for (int u = 0; u < n; ++u) {
    m.x[static_cast<size_t>(u)] = spec.eigenvector(u);
    bucket[static_cast<size_t>(u)] = quantize(spec.eigenvector(u), x_tolerance);
    m.y[static_cast<size_t>(u)] = stack_height[bucket[static_cast<size_t>(u)]]++;
  }

  m.edge_class.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    const bool internal =
        bucket[static_cast<size_t>(e.u)] == bucket[static_cast<size_t>(e.v)];
    if (e.sign > 0) {
      m.edge_class.push_back(internal ? EdgeClass::PositiveInternal
                                      : EdgeClass::PositiveExternal);
    } else {
      m.edge_class.push_back(internal ? EdgeClass::NegativeInternal
                                      : EdgeClass::NegativeExternal);
    }
  }

  for (int u = 0; u < n; ++u) {
    if (bucket[static_cast<size_t>(u)] < 0) {
      m.faction_left.push_back(u);
    } else {
      m.faction_right.push_back(u);
    }
  }

  if (mu != nullptr) {
    const double left = mu->evaluate(g, m.faction_left);
    const double right = mu->evaluate(g, m.faction_right);
    m.gamma = left - right;
    m.gamma_scale = std::max(left, right);
  }
  return m;
}

std::vector<int> faction_assignment(const LayoutModel& m) {
  std::vector<int> assignment(m.x.size(), 1);
  for (int u : m.faction_left) assignment[static_cast<size_t>(u)] = -1;
  return assignment;
}

double measure_size(const SignedGraph&, std::span<const int> nodes) {
  return static_cast<double>(nodes.size());
}

namespace {

std::vector<char> membership(const SignedGraph& g, std::span<const int> nodes) {
  std::vector<char> in(static_cast<size_t>(g.node_count()), 0);
  for (int u : nodes) {
    if (u < 0 || u >= g.node_count()) {
      throw std::invalid_argument("node set entry out of range");
    }
    in[static_cast<size_t>(u)] = 1;
  }
  return in;
}

}  // namespace

double measure_clustering(const SignedGraph& g, std::span<const int> nodes) {
  if (nodes.empty()) return 0.0;
  const std::vector<char> in = membership(g, nodes);

  double sum = 0.0;
  std::vector<int> inside;
  for (int u : nodes) {
    inside.clear();
    for (const auto& [w, sign] : g.neighbors(u)) {
      (void)sign;
      if (in[static_cast<size_t>(w)]) inside.push_back(w);
    }
    const size_t k = inside.size();
    if (k < 2) continue;
    long long links = 0;
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = i + 1; j < k; ++j) {
        if (g.sign_of(inside[i], inside[j]) != 0) ++links;
      }
    }
    sum += 2.0 * static_cast<double>(links) /
           (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return sum / static_cast<double>(nodes.size());
}

namespace {

std::pair<long long, long long> internal_edge_counts(
    const SignedGraph& g, std::span<const int> nodes) {
  const std::vector<char> in = membership(g, nodes);
  long long positive = 0, all = 0;
  for (const auto& e : g.edges()) {
    if (in[static_cast<size_t>(e.u)] && in[static_cast<size_t>(e.v)]) {
      ++all;
      if (e.sign > 0) ++positive;
    }
  }
  return {positive, all};
}

}  // namespace

double measure_pos_density(const SignedGraph& g, std::span<const int> nodes) {
  if (nodes.size() < 2) return 0.0;
  const auto [positive, all] = internal_edge_counts(g, nodes);
  (void)all;
  const double pairs =
      static_cast<double>(nodes.size()) * static_cast<double>(nodes.size() - 1) / 2.0;
  return static_cast<double>(positive) / pairs;
}

double measure_pos_ratio(const SignedGraph& g, std::span<const int> nodes) {
  const auto [positive, all] = internal_edge_counts(g, nodes);
  if (all == 0) return 0.0;
  return static_cast<double>(positive) / static_cast<double>(all);
}

Measure measure_by_name(const std::string& name) {
  if (name == "size") return {name, measure_size};
  if (name == "clustering") return {name, measure_clustering};
  if (name == "pos_density") return {name, measure_pos_density};
  if (name == "pos_ratio") return {name, measure_pos_ratio};
  throw std::invalid_argument("unknown measure '" + name + "'");
}

nlohmann::ordered_json to_json(const LayoutModel& m) {
  nlohmann::ordered_json j;
  j["x"] = m.x;
  j["y"] = m.y;
  auto& classes = j["edge_class"] = nlohmann::ordered_json::array();
  for (EdgeClass c : m.edge_class) classes.push_back(to_string(c));
  j["faction_left"] = m.faction_left;
  j["faction_right"] = m.faction_right;
  j["gamma"] = m.gamma.has_value() ? nlohmann::ordered_json(*m.gamma)
                                   : nlohmann::ordered_json(nullptr);
  j["gamma_scale"] = m.gamma_scale.has_value()
                         ? nlohmann::ordered_json(*m.gamma_scale)
                         : nlohmann::ordered_json(nullptr);
  j["lambda_label"] = m.lambda_label;
  return j;
}

LayoutModel layout_from_json(const nlohmann::json& j) {
  LayoutModel m;
  try {
    m.x = j.at("x").get<std::vector<double>>();
    m.y = j.at("y").get<std::vector<int>>();
    for (const auto& entry : j.at("edge_class")) {
      auto c = edge_class_from_string(entry.get<std::string>());
      if (!c) {
        throw std::invalid_argument("unknown edge class '" +
                                    entry.get<std::string>() + "'");
      }
      m.edge_class.push_back(*c);
    }
    m.faction_left = j.at("faction_left").get<std::vector<int>>();
    m.faction_right = j.at("faction_right").get<std::vector<int>>();
    if (!j.at("gamma").is_null()) m.gamma = j.at("gamma").get<double>();
    if (!j.at("gamma_scale").is_null()) {
      m.gamma_scale = j.at("gamma_scale").get<double>();
    }
    m.lambda_label = j.at("lambda_label").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid layout JSON: ") + e.what());
  }
  if (m.faction_left.size() + m.faction_right.size() != m.x.size() ||
      m.y.size() != m.x.size()) {
    throw std::invalid_argument("invalid layout JSON: inconsistent lengths");
  }
  return m;
}

}  // namespace balviz
