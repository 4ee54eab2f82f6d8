#include "balviz/cli.hpp"

#include "balviz/balance.hpp"
#include "balviz/spectral.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace balviz {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot read input '" + path + "'");
  }
  return std::string(std::istreambuf_iterator<char>(file),
                     std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write output '" + path + "'");
  }
  file << bytes;
  if (!file) {
    throw std::runtime_error("failed writing output '" + path + "'");
  }
}

SignedGraph load_graph(const std::string& path) {
  SignedGraph g = parse_edge_list(read_input(path));
  if (g.node_count() == 0) {
    throw std::runtime_error("input graph is empty");
  }
  if (!is_connected(g)) {
    throw std::runtime_error(
        "input graph is disconnected; a connected signed network is required");
  }
  return g;
}

const Measure* resolve_measure(const std::string& name, Measure& storage) {
  if (name == "none") return nullptr;
  storage = measure_by_name(name);
  return &storage;
}

// --verify: the residual recomputed outside the solver must meet the
// default bound, and the exact switching verdict must agree with the
// spectral criterion (lambda_min == 0 iff balanced).
int verify_spectral(const SignedGraph& g, const SignedMatrix& laplacian,
                    const SpectralResult& spectral) {
  const double residual = verify_residual(laplacian, spectral);
  const double tol = default_residual_tol(laplacian);
  if (residual > tol) {
    std::cerr << "verify: residual " << residual << " exceeds bound " << tol
              << "\n";
    return kExitVerifyFailed;
  }
  const bool switching = switching_balance_test(g).is_balanced;
  const bool spectral_balanced = spectral.lambda_min <= kBalancedLambdaTol;
  if (switching != spectral_balanced) {
    std::cerr << "verify: switching test ("
              << (switching ? "balanced" : "unbalanced")
              << ") disagrees with lambda_min = " << spectral.lambda_min
              << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

std::string json_bytes(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

int run_layout(const CliConfig& config) {
  const SignedGraph g = load_graph(config.input);
  const SignedMatrix laplacian = signed_laplacian(g);
  const SpectralResult spectral = smallest_eigenpair(laplacian);
  if (config.verify) {
    const int status = verify_spectral(g, laplacian, spectral);
    if (status != kExitOk) return status;
  }
  Measure storage;
  const Measure* mu = resolve_measure(config.mu, storage);
  const LayoutModel layout =
      compute_layout(g, spectral, mu, config.x_tolerance);
  write_output(config.output, json_bytes(to_json(layout)));
  return kExitOk;
}

int run_metrics(const CliConfig& config) {
  const SignedGraph g = load_graph(config.input);
  const SignedMatrix laplacian = signed_laplacian(g);
  const SpectralResult spectral = smallest_eigenpair(laplacian);
  if (config.verify) {
    const int status = verify_spectral(g, laplacian, spectral);
    if (status != kExitOk) return status;
  }
  const LayoutModel layout =
      compute_layout(g, spectral, nullptr, config.x_tolerance);
  const std::vector<int> factions = faction_assignment(layout);
  const BalanceReport report =
      make_balance_report(g, spectral.lambda_min, factions);

  nlohmann::ordered_json j = to_json(report);
  j["node_count"] = g.node_count();
  j["edge_count"] = g.edge_count();
  write_output(config.output, json_bytes(j));
  return kExitOk;
}

int run_generate(const CliConfig& config) {
  const GenResult result = generate(config.gen);
  for (const auto& warning : result.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  write_output(config.output, serialize_edge_list(result.graph));

  const nlohmann::ordered_json sidecar = sidecar_json(config.gen, result);
  std::string sidecar_path = config.sidecar;
  if (sidecar_path.empty() && !config.output.empty()) {
    sidecar_path = config.output + ".json";
  }
  if (!sidecar_path.empty()) {
    write_output(sidecar_path, json_bytes(sidecar));
  }
  if (config.json) {
    std::cout << json_bytes(sidecar);
  }
  return kExitOk;
}

int run_reshuffle(const CliConfig& config) {
  SignedGraph g = parse_edge_list(read_input(config.input));
  const SignedGraph shuffled = reshuffle_signs(g, config.seed);
  write_output(config.output, serialize_edge_list(shuffled));
  return kExitOk;
}

int run_render(const CliConfig& config) {
  const SignedGraph g = load_graph(config.input);
  LayoutModel layout;
  if (!config.layout_json.empty()) {
    if (config.verify) {
      throw std::runtime_error(
          "--verify requires computing the layout; drop --layout");
    }
    layout = layout_from_json(nlohmann::json::parse(read_input(config.layout_json)));
  } else {
    const SignedMatrix laplacian = signed_laplacian(g);
    const SpectralResult spectral = smallest_eigenpair(laplacian);
    if (config.verify) {
      const int status = verify_spectral(g, laplacian, spectral);
      if (status != kExitOk) return status;
    }
    Measure storage;
    const Measure* mu = resolve_measure(config.mu, storage);
    layout = compute_layout(g, spectral, mu, config.x_tolerance);
  }
  write_output(config.output, render_svg(layout, g, config.render));
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config) {
  try {
    switch (config.command) {
      case CliConfig::Command::Layout: return run_layout(config);
      case CliConfig::Command::Metrics: return run_metrics(config);
      case CliConfig::Command::Generate: return run_generate(config);
      case CliConfig::Command::Reshuffle: return run_reshuffle(config);
      case CliConfig::Command::Render: return run_render(config);
    }
    std::cerr << "error: unknown subcommand\n";
    return kExitUsage;
  } catch (const convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace balviz
