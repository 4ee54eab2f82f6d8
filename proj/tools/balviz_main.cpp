#include "balviz/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common_flags(CLI::App* cmd, balviz::CliConfig& config,
                      bool with_input = true) {
  if (with_input) {
    cmd->add_option("input", config.input,
                    "Edge-list file, or '-' for standard input")
        ->required();
  }
  cmd->add_option("-o,--output", config.output,
                  "Output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "balviz: spectral balance layouts, metrics, generators and SVG "
      "rendering for signed networks"};
  app.require_subcommand(1);

  balviz::CliConfig config;

  auto* layout = app.add_subcommand(
      "layout", "Compute node coordinates, edge classes and factions (JSON)");
  add_common_flags(layout, config);
  layout->add_option("--mu", config.mu,
                     "Faction measure: none|size|clustering|pos_density|pos_ratio");
  layout->add_option("--x-tolerance", config.x_tolerance,
                     "Quantization width for equal-abscissa grouping");
  layout->add_flag("--verify", config.verify,
                   "Re-check the eigenpair residual and the balance verdict");

  auto* metrics = app.add_subcommand(
      "metrics", "Report balance verdict, lambda_min, frustration and "
                 "triangle counts (JSON)");
  add_common_flags(metrics, config);
  metrics->add_option("--x-tolerance", config.x_tolerance,
                      "Quantization width for faction assignment");
  metrics->add_flag("--verify", config.verify,
                    "Re-check the eigenpair residual and the balance verdict");

  auto* generate = app.add_subcommand(
      "generate", "Generate a synthetic signed network (edge list + JSON "
                  "sidecar)");
  add_common_flags(generate, config, /*with_input=*/false);
  generate->add_option("-n,--nodes", config.gen.n, "Node count")->required();
  generate->add_option("--delta", config.gen.delta,
                       "Target edge density in (0, 1]");
  generate->add_option("--nu", config.gen.nu,
                       "Target unbalanced-triangle ratio in [0, 1]");
  generate->add_option("--seed", config.gen.seed, "RNG seed");
  generate->add_option("--sidecar", config.sidecar,
                       "Sidecar JSON path (default: <output>.json)");
  generate->add_flag("--json", config.json,
                     "Also print the sidecar JSON to stdout (needs -o)");

  auto* reshuffle = app.add_subcommand(
      "reshuffle", "Permute edge signs uniformly, keeping the topology");
  add_common_flags(reshuffle, config);
  reshuffle->add_option("--seed", config.seed, "RNG seed");

  auto* render = app.add_subcommand("render", "Draw the network as SVG");
  add_common_flags(render, config);
  render->add_option("--mu", config.mu,
                     "Faction measure tilting the x-axis: "
                     "none|size|clustering|pos_density|pos_ratio");
  render->add_option("--x-tolerance", config.x_tolerance,
                     "Quantization width for equal-abscissa grouping");
  render->add_option("--layout", config.layout_json,
                     "Reuse a precomputed layout JSON instead of computing");
  render->add_flag("--verify", config.verify,
                   "Re-check the eigenpair residual and the balance verdict");
  render->add_option("--width", config.render.width, "Canvas width (px)");
  render->add_option("--height", config.render.height, "Canvas height (px)");
  render->add_option("--margin", config.render.margin, "Canvas margin (px)");
  render->add_option("--node-radius", config.render.node_radius,
                     "Node radius (px)");
  render->add_option("--color-positive", config.render.color_positive,
                     "Positive-edge color (#RRGGBB)");
  render->add_option("--color-negative", config.render.color_negative,
                     "Negative-edge color (#RRGGBB)");
  render->add_flag("--bundling", config.render.bundling,
                   "Curve edges by class instead of drawing straight lines");
  render->add_option("--bundle-strength", config.render.bundle_strength,
                     "Control-point offset as a fraction of edge length");
  render->add_option("--max-tilt", config.render.max_tilt_degrees,
                     "Maximum x-axis tilt (degrees)");
  render->add_flag_callback(
      "--no-lambda-label",
      [&config]() { config.render.show_lambda_label = false; },
      "Omit the lambda label at the top of the y-axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : balviz::kExitUsage;
  }

  if (layout->parsed()) config.command = balviz::CliConfig::Command::Layout;
  if (metrics->parsed()) config.command = balviz::CliConfig::Command::Metrics;
  if (generate->parsed()) config.command = balviz::CliConfig::Command::Generate;
  if (reshuffle->parsed()) config.command = balviz::CliConfig::Command::Reshuffle;
  if (render->parsed()) config.command = balviz::CliConfig::Command::Render;

  if (config.json && config.output.empty()) {
    std::cerr << "error: --json needs -o for the edge list\n";
    return balviz::kExitUsage;
  }

  return balviz::run(config);
}
