#include "balviz/synth.hpp"

#include "balviz/balance.hpp"
#include "balviz/rng.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace balviz {

namespace {

struct WorkEdge {
  int u;
  int v;
  int sign;
};

std::vector<std::vector<int>> build_adjacency(const std::vector<WorkEdge>& edges,
                                              int n) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

// Finds the edges that are not bridges; removing any of them keeps the
// graph connected. Iterative lowlink DFS over a flat CSR adjacency; all
// scratch buffers are reused across calls since the removal loop runs this
// once per removal.
class BridgeFinder {
 public:
  // Fills `removable` with the indices of non-bridge edges.
  void non_bridge_edges(const std::vector<WorkEdge>& edges, int n,
                        std::vector<int>& removable) {
    const int m = static_cast<int>(edges.size());
    offset_.assign(static_cast<size_t>(n) + 1, 0);
    for (const auto& e : edges) {
      ++offset_[static_cast<size_t>(e.u) + 1];
      ++offset_[static_cast<size_t>(e.v) + 1];
    }
    for (int i = 0; i < n; ++i) offset_[static_cast<size_t>(i) + 1] += offset_[static_cast<size_t>(i)];
    cursor_.assign(offset_.begin(), offset_.end() - 1);
    target_.resize(static_cast<size_t>(2) * static_cast<size_t>(m));
    eid_.resize(static_cast<size_t>(2) * static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto& e = edges[static_cast<size_t>(i)];
      place(e.u, e.v, i);
      place(e.v, e.u, i);
    }

    entry_.assign(static_cast<size_t>(n), -1);
    low_.assign(static_cast<size_t>(n), 0);
    is_bridge_.assign(static_cast<size_t>(m), 0);
    node_stack_.clear();
    edge_stack_.clear();
    next_stack_.clear();
    int timer = 0;

    for (int root = 0; root < n; ++root) {
      if (entry_[static_cast<size_t>(root)] != -1) continue;
      push(root, -1, timer);
      while (!node_stack_.empty()) {
        const int node = node_stack_.back();
        int& next = next_stack_.back();
        if (next < offset_[static_cast<size_t>(node) + 1]) {
          const int slot = next++;
          const int w = target_[static_cast<size_t>(slot)];
          const int id = eid_[static_cast<size_t>(slot)];
          if (id == edge_stack_.back()) continue;
          if (entry_[static_cast<size_t>(w)] != -1) {
            low_[static_cast<size_t>(node)] =
                std::min(low_[static_cast<size_t>(node)], entry_[static_cast<size_t>(w)]);
          } else {
            push(w, id, timer);
          }
        } else {
          const int parent_edge = edge_stack_.back();
          node_stack_.pop_back();
          edge_stack_.pop_back();
          next_stack_.pop_back();
          if (parent_edge >= 0) {
            const auto& pe = edges[static_cast<size_t>(parent_edge)];
            const int parent = pe.u == node ? pe.v : pe.u;
            low_[static_cast<size_t>(parent)] =
                std::min(low_[static_cast<size_t>(parent)], low_[static_cast<size_t>(node)]);
            if (low_[static_cast<size_t>(node)] > entry_[static_cast<size_t>(parent)]) {
              is_bridge_[static_cast<size_t>(parent_edge)] = 1;
            }
          }
        }
      }
    }

    removable.clear();
    for (int i = 0; i < m; ++i) {
      if (!is_bridge_[static_cast<size_t>(i)]) removable.push_back(i);
    }
  }

 private:
  void place(int from, int to, int id) {
    const int slot = cursor_[static_cast<size_t>(from)]++;
    target_[static_cast<size_t>(slot)] = to;
    eid_[static_cast<size_t>(slot)] = id;
  }

  void push(int node, int via_edge, int& timer) {
    entry_[static_cast<size_t>(node)] = low_[static_cast<size_t>(node)] = timer++;
    node_stack_.push_back(node);
    edge_stack_.push_back(via_edge);
    next_stack_.push_back(offset_[static_cast<size_t>(node)]);
  }

  std::vector<int> offset_, cursor_, target_, eid_;
  std::vector<int> entry_, low_;
  std::vector<char> is_bridge_;
  std::vector<int> node_stack_, edge_stack_, next_stack_;
};

SignedGraph to_graph(const std::vector<WorkEdge>& edges, int n) {
  std::vector<SignedEdge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({e.u, e.v, e.sign});
  return SignedGraph(n, std::move(out));
}

// Incremental triangle bookkeeping for the flip phase. A flip of (u,v)
// toggles exactly the triangles through (u,v), so the global unbalanced
// count and the per-edge balanced-triangle counts are updated from the
// common neighborhood alone.
struct TriangleState {
  std::vector<std::vector<int>> adj;  // sorted neighbor lists, fixed topology
  std::unordered_map<std::uint64_t, int> edge_index;
  std::vector<signed char> sign_by_edge;
  std::vector<int> balanced_through;  // per edge: balanced triangles containing it
  long long total = 0;
  long long unbalanced = 0;

  static std::uint64_t key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  double ratio() const {
    return total == 0 ? 0.0 : static_cast<double>(unbalanced) /
                                  static_cast<double>(total);
  }

  void init(const std::vector<WorkEdge>& edges, int n) {
    adj = build_adjacency(edges, n);
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    edge_index.reserve(edges.size() * 2);
    sign_by_edge.resize(edges.size());
    balanced_through.assign(edges.size(), 0);
    for (size_t i = 0; i < edges.size(); ++i) {
      edge_index[key(edges[i].u, edges[i].v)] = static_cast<int>(i);
      sign_by_edge[i] = static_cast<signed char>(edges[i].sign);
    }
    total = 0;
    unbalanced = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      for_common_neighbors(e.u, e.v, [&](int w) {
        if (w <= e.v) return;  // u < v < w: count each triangle once
        ++total;
        const int iuw = index_of(e.u, w);
        const int ivw = index_of(e.v, w);
        const int product = e.sign * sign_by_edge[static_cast<size_t>(iuw)] *
                            sign_by_edge[static_cast<size_t>(ivw)];
        if (product < 0) {
          ++unbalanced;
        } else {
          ++balanced_through[i];
          ++balanced_through[static_cast<size_t>(iuw)];
          ++balanced_through[static_cast<size_t>(ivw)];
        }
      });
    }
  }

  int index_of(int u, int v) const { return edge_index.at(key(u, v)); }

  int sign_at(int u, int v) const {
    return sign_by_edge[static_cast<size_t>(index_of(u, v))];
  }

  template <typename Fn>
  void for_common_neighbors(int u, int v, Fn&& fn) const {
    const auto& nu = adj[static_cast<size_t>(u)];
    const auto& nv = adj[static_cast<size_t>(v)];
    auto iu = nu.begin();
    auto iv = nv.begin();
    while (iu != nu.end() && iv != nv.end()) {
      if (*iu < *iv) {
        ++iu;
      } else if (*iv < *iu) {
        ++iv;
      } else {
        fn(*iu);
        ++iu;
        ++iv;
      }
    }
  }

  // Flip the sign of edge i = (u,v); every triangle through it toggles.
  void flip(int i, int u, int v) {
    sign_by_edge[static_cast<size_t>(i)] =
        static_cast<signed char>(-sign_by_edge[static_cast<size_t>(i)]);
    const int s_uv = sign_by_edge[static_cast<size_t>(i)];
    for_common_neighbors(u, v, [&](int w) {
      const int iuw = index_of(u, w);
      const int ivw = index_of(v, w);
      const int product = s_uv * sign_by_edge[static_cast<size_t>(iuw)] *
                          sign_by_edge[static_cast<size_t>(ivw)];
      const int delta = product < 0 ? -1 : 1;  // balanced count change
      if (product < 0) {
        ++unbalanced;
      } else {
        --unbalanced;
      }
      balanced_through[static_cast<size_t>(i)] += delta;
      balanced_through[static_cast<size_t>(iuw)] += delta;
      balanced_through[static_cast<size_t>(ivw)] += delta;
    });
  }
};

}  // namespace

GenResult generate(const GenParams& p, const GenOptions& options) {
  if (p.n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(p.delta > 0.0 && p.delta <= 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  if (!(p.nu >= 0.0 && p.nu <= 1.0)) {
    throw std::invalid_argument("nu must lie in [0, 1]");
  }
  if (p.nu > 0.0 && p.n < 3) {
    throw std::invalid_argument("nu > 0 requires at least 3 nodes");
  }

  std::mt19937_64 gen(p.seed);
  GenResult result;
  if (p.n >= 2 && p.delta < 2.0 / static_cast<double>(p.n)) {
    result.warnings.push_back(
        "delta below 2/n; density cannot drop below the spanning-tree bound");
  }

  // Phase 1: complete balanced graph over a random two-set split.
  std::vector<int> side(static_cast<size_t>(p.n));
  for (auto& s : side) s = rng::uniform_index(gen, 2) == 0 ? -1 : 1;
  std::vector<WorkEdge> edges;
  edges.reserve(static_cast<size_t>(p.n) * (p.n - 1) / 2);
  for (int u = 0; u < p.n; ++u) {
    for (int v = u + 1; v < p.n; ++v) {
      edges.push_back(
          {u, v, side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)] ? 1 : -1});
    }
  }

  // Phase 2: remove uniformly chosen non-disconnecting edges until the
  // density target is met.
  const double pair_count = static_cast<double>(p.n) *
                            static_cast<double>(p.n - 1) / 2.0;
  if (p.n >= 2) {
    BridgeFinder bridges;
    std::vector<int> removable;
    while (static_cast<double>(edges.size()) / pair_count > p.delta) {
      bridges.non_bridge_edges(edges, p.n, removable);
      if (removable.empty()) {
        result.delta_reached = false;
        result.warnings.push_back(
            "delta unreachable: graph is a spanning tree, no removable edge");
        break;
      }
      const int pick = removable[rng::uniform_index(gen, removable.size())];
      edges.erase(edges.begin() + pick);
      if (options.validate_connectivity && !is_connected(to_graph(edges, p.n))) {
        throw std::logic_error("edge removal disconnected the graph");
      }
    }
  }
  result.delta_achieved =
      pair_count == 0.0 ? 0.0 : static_cast<double>(edges.size()) / pair_count;

  // Phase 3: flip signs of edges in balanced triangles while the
  // unbalanced-triangle ratio is below nu.
  if (p.nu > 0.0) {
    TriangleState tri;
    tri.init(edges, p.n);
    if (tri.total == 0) {
      result.nu_reached = false;
      result.warnings.push_back("nu unreachable: the graph has no triangles");
    } else {
      const long long cap = 50 * static_cast<long long>(edges.size());
      std::vector<int> best_signs;
      double best_distance = std::abs(tri.ratio() - p.nu);
      bool crossed = false;
      std::vector<size_t> candidates;
      for (long long iter = 0; iter < cap; ++iter) {
        if (tri.ratio() >= p.nu) {
          crossed = true;
          break;
        }
        candidates.clear();
        for (size_t i = 0; i < edges.size(); ++i) {
          if (tri.balanced_through[i] > 0) candidates.push_back(i);
        }
        if (candidates.empty()) {
          result.nu_reached = false;
          result.warnings.push_back(
              "nu unreachable: no edge lies in a balanced triangle");
          break;
        }
        const size_t pick =
            candidates[rng::uniform_index(gen, candidates.size())];
        auto& e = edges[pick];
        e.sign = -e.sign;
        tri.flip(static_cast<int>(pick), e.u, e.v);
        result.nu_trace.push_back(tri.ratio());
        const double distance = std::abs(tri.ratio() - p.nu);
        if (distance < best_distance) {
          best_distance = distance;
          best_signs.clear();
          best_signs.reserve(edges.size());
          for (const auto& we : edges) best_signs.push_back(we.sign);
        }
      }
      if (!crossed && tri.ratio() >= p.nu) crossed = true;
      if (!crossed && result.nu_reached) {
        // Iteration cap: keep the closest-to-target sign assignment seen.
        result.nu_reached = false;
        result.warnings.push_back(
            "nu unreachable within the flip budget; returning closest state");
        if (!best_signs.empty() &&
            best_distance < std::abs(tri.ratio() - p.nu)) {
          for (size_t i = 0; i < edges.size(); ++i) {
            edges[i].sign = best_signs[i];
          }
        }
      }
    }
  }

  result.graph = to_graph(edges, p.n);
  result.nu_achieved = triangle_census(result.graph).ratio();
  return result;
}

SignedGraph reshuffle_signs(const SignedGraph& g, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<int> signs;
  signs.reserve(g.edges().size());
  for (const auto& e : g.edges()) signs.push_back(e.sign);

  for (size_t i = signs.size(); i > 1; --i) {
    const size_t j = rng::uniform_index(gen, i);
    std::swap(signs[i - 1], signs[j]);
  }

  std::vector<SignedEdge> edges;
  edges.reserve(signs.size());
  for (size_t i = 0; i < signs.size(); ++i) {
    edges.push_back({g.edges()[i].u, g.edges()[i].v, signs[i]});
  }
  return SignedGraph(g.node_count(), std::move(edges),
                     g.has_labels() ? g.labels() : std::vector<std::string>{});
}

nlohmann::ordered_json sidecar_json(const GenParams& p, const GenResult& r) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["delta_target"] = p.delta;
  j["delta_achieved"] = r.delta_achieved;
  j["nu_target"] = p.nu;
  j["nu_achieved"] = r.nu_achieved;
  j["seed"] = p.seed;
  j["rng_id"] = rng::kRngId;
  return j;
}

}  // namespace balviz
