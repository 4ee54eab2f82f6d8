#pragma once

#include "balviz/signed_graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace balviz {

struct GenParams {
  int n = 0;             // node count
  double delta = 1.0;    // target edge density in (0, 1]
  double nu = 0.0;       // target unbalanced-triangle ratio in [0, 1]
  std::uint64_t seed = 0;
};

struct GenOptions {
  // Recheck connectivity after every removal (slow; for tests).
  bool validate_connectivity = false;
};

struct GenResult {
  SignedGraph graph;
  double delta_achieved = 0.0;
  double nu_achieved = 0.0;
  bool delta_reached = true;  // false: removal stopped at a spanning tree
  bool nu_reached = true;     // false: ran out of flips or candidates
  std::vector<double> nu_trace;  // ratio after each accepted sign flip
  std::vector<std::string> warnings;
};

// Three-phase seeded construction: a complete two-faction balanced graph
// (positive inside factions, negative across), uniformly random removal of
// non-disconnecting edges until the density target is met, then uniformly
// random sign flips of edges lying in at least one balanced triangle until
// the unbalanced-triangle ratio first reaches nu. Output is always
// connected; nu = 0 skips the flip phase entirely, so the graph is exactly
// balanced. Unreachable targets produce warnings, not errors.
GenResult generate(const GenParams& p, const GenOptions& options = {});

// Same topology and labels, sign multiset permuted uniformly at random
// (Fisher-Yates over edge slots).
SignedGraph reshuffle_signs(const SignedGraph& g, std::uint64_t seed);

// Metadata emitted next to generated edge lists.
nlohmann::ordered_json sidecar_json(const GenParams& p, const GenResult& r);

}  // namespace balviz
