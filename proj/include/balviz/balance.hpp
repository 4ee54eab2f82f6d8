#pragma once

#include "balviz/signed_graph.hpp"

#include <json.hpp>

#include <span>
#include <vector>

namespace balviz {

// A connected signed graph is balanced iff the smallest eigenvalue of its
// signed Laplacian is 0; this is the numeric threshold for "0".
inline constexpr double kBalancedLambdaTol = 1e-8;

struct SwitchingResult {
  bool is_balanced = false;
  // Valid when balanced: per-node +1/-1 with every positive edge inside a
  // part and every negative edge across.
  std::vector<int> assignment;
  // Valid when unbalanced: nodes of a cycle with an odd number of negative
  // edges. Consecutive entries are tree edges; the closing edge is
  // (back(), front()).
  std::vector<int> witness_cycle;
};

// BFS switching test: assigns s(root) = +1 and s(v) = sign(u,v) * s(u)
// across tree edges, then checks every remaining edge for consistency.
// Linear time, equivalent to checking that all cycles have an even number
// of negative edges. Throws std::invalid_argument on disconnected input.
SwitchingResult switching_balance_test(const SignedGraph& g);

struct FrustrationCounts {
  long long positive = 0;  // positive edges whose endpoints disagree
  long long negative = 0;  // negative edges whose endpoints agree
};

// Counts edges disagreeing with a +-1 node assignment.
FrustrationCounts frustration_against(const SignedGraph& g,
                                      std::span<const int> assignment);

struct TriangleCounts {
  long long total = 0;
  long long unbalanced = 0;  // sign product -1

  double ratio() const {
    return total == 0 ? 0.0 : static_cast<double>(unbalanced) /
                                  static_cast<double>(total);
  }
};

// Triangle census via sorted adjacency intersection; each triangle counted
// once.
TriangleCounts triangle_census(const SignedGraph& g);

// Enumerates every simple cycle and returns true iff all of them contain an
// even number of negative edges. Exponential; a cross-check oracle for
// small instances only. Throws std::invalid_argument when node_count
// exceeds max_nodes.
bool cycle_oracle(const SignedGraph& g, int max_nodes = 12);

struct BalanceReport {
  bool is_balanced = false;
  double lambda_min = 0.0;
  long long frustrated_positive = 0;
  long long frustrated_negative = 0;
  long long triangle_total = 0;
  long long triangle_unbalanced = 0;

  double nu() const {
    return triangle_total == 0
               ? 0.0
               : static_cast<double>(triangle_unbalanced) /
                     static_cast<double>(triangle_total);
  }
};

// Assembles the full report: exact verdict from the switching test,
// frustration counts against the given faction assignment (+1 right /
// -1 left from the layout), triangle census, and the supplied lambda_min.
BalanceReport make_balance_report(const SignedGraph& g, double lambda_min,
                                  std::span<const int> faction_assignment);

nlohmann::ordered_json to_json(const BalanceReport& report);

}  // namespace balviz
