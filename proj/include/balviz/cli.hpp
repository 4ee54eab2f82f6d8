#pragma once

#include "balviz/layout.hpp"
#include "balviz/render.hpp"
#include "balviz/synth.hpp"

#include <cstdint>
#include <string>

namespace balviz {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;        // bad flags or unusable input
inline constexpr int kExitVerifyFailed = 2; // --verify disagreement
inline constexpr int kExitNoConvergence = 3;

struct CliConfig {
  enum class Command { Layout, Metrics, Generate, Reshuffle, Render };

  Command command = Command::Layout;
  std::string input;         // path or "-" for stdin (unused by generate)
  std::string output;        // path; empty = stdout
  std::string mu = "none";   // none|size|clustering|pos_density|pos_ratio
  double x_tolerance = kDefaultXTolerance;
  bool verify = false;
  bool json = false;         // generate/reshuffle: print sidecar JSON to stdout

  // generate
  GenParams gen;
  std::string sidecar;       // explicit sidecar path; default <output>.json

  // reshuffle
  std::uint64_t seed = 0;

  // render
  std::string layout_json;   // precomputed layout; empty = compute
  RenderSpec render;
};

// Runs one subcommand end to end; never throws. Errors are reported on
// stderr and mapped to the exit codes above.
int run(const CliConfig& config);

}  // namespace balviz
