#include "balviz/signed_graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

namespace balviz {

SignedGraph::SignedGraph(int node_count, std::vector<SignedEdge> edges,
                         std::vector<std::string> labels)
    : node_count_(node_count),
      edges_(std::move(edges)),
      labels_(std::move(labels)) {
  if (node_count_ < 0) {
    throw std::invalid_argument("node_count must be non-negative");
  }
  if (!labels_.empty() &&
      labels_.size() != static_cast<size_t>(node_count_)) {
    throw std::invalid_argument("labels must have one entry per node");
  }

  adjacency_.resize(static_cast<size_t>(node_count_));
  std::map<std::pair<int, int>, int> seen;
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= node_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    if (e.sign != 1 && e.sign != -1) {
      throw std::invalid_argument("edge sign must be +1 or -1");
    }
    if (!seen.emplace(std::make_pair(e.u, e.v), e.sign).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + ")");
    }
    adjacency_[static_cast<size_t>(e.u)].emplace_back(e.v, e.sign);
    adjacency_[static_cast<size_t>(e.v)].emplace_back(e.u, e.sign);
    if (e.sign > 0) ++positive_count_;
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
}

std::string SignedGraph::label(int u) const {
  if (u < 0 || u >= node_count_) {
    throw std::out_of_range("node index out of range");
  }
  if (has_labels()) return labels_[static_cast<size_t>(u)];
  return std::to_string(u);
}

int SignedGraph::sign_of(int u, int v) const {
  const auto& nbrs = adjacency_[static_cast<size_t>(u)];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(),
                             std::make_pair(v, std::numeric_limits<int>::min()));
  if (it != nbrs.end() && it->first == v) return it->second;
  return 0;
}

namespace {

int parse_sign_token(const std::string& tok, int line) {
  if (tok == "+" || tok == "+1" || tok == "1") return 1;
  if (tok == "-" || tok == "-1") return -1;
  throw parse_error("unknown sign token '" + tok + "'", line);
}

}  // namespace

SignedGraph parse_edge_list(const std::string& text) {
  std::unordered_map<std::string, int> index_of;
  std::vector<std::string> labels;
  std::vector<SignedEdge> edges;
  std::map<std::pair<int, int>, int> seen;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index_of.emplace(name, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(name);
    return it->second;
  };

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream tokens(line);
    std::string a, b, s, extra;
    if (!(tokens >> a)) continue;       // blank line
    if (a.front() == '#') continue;     // comment
    if (!(tokens >> b >> s)) {
      throw parse_error("expected 'U V S'", line_no);
    }
    if (tokens >> extra) {
      throw parse_error("trailing token '" + extra + "'", line_no);
    }

    int sign = parse_sign_token(s, line_no);
    int u = intern(a);
    int v = intern(b);
    if (u == v) {
      throw parse_error("self-loop at '" + a + "'", line_no);
    }
    auto key = std::minmax(u, v);
    auto [it, inserted] = seen.emplace(std::make_pair(key.first, key.second), sign);
    if (!inserted) {
      if (it->second != sign) {
        throw parse_error("conflicting duplicate edge '" + a + " " + b + "'",
                          line_no);
      }
      throw parse_error("duplicate edge '" + a + " " + b + "'", line_no);
    }
    edges.push_back({key.first, key.second, sign});
  }

  const int node_count = static_cast<int>(labels.size());
  return SignedGraph(node_count, std::move(edges), std::move(labels));
}

std::string serialize_edge_list(const SignedGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += g.label(e.u);
    out += ' ';
    out += g.label(e.v);
    out += ' ';
    out += (e.sign > 0 ? '+' : '-');
    out += '\n';
  }
  return out;
}

bool is_connected(const SignedGraph& g) {
  const int n = g.node_count();
  if (n <= 1) return true;

  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [w, sign] : g.neighbors(u)) {
      (void)sign;
      if (!visited[static_cast<size_t>(w)]) {
        visited[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

SignedMatrix signed_adjacency(const SignedGraph& g) {
  const int n = g.node_count();
  SignedMatrix a = SignedMatrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    const double s = static_cast<double>(e.sign);
    a(e.u, e.v) = s;
    a(e.v, e.u) = s;
  }
  return a;
}

SignedMatrix signed_laplacian(const SignedGraph& g) {
  const int n = g.node_count();
  SignedMatrix l = SignedMatrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    const double s = static_cast<double>(e.sign);
    l(e.u, e.v) = -s;
    l(e.v, e.u) = -s;
    l(e.u, e.u) += 1.0;
    l(e.v, e.v) += 1.0;
  }
  return l;
}

}  // namespace balviz
