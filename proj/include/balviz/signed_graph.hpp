#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace balviz {

// Undirected edge with a +1/-1 label. Normalized so that u < v.
struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 1;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Dense symmetric matrix over node indices (adjacency, Laplacian).
using SignedMatrix = Eigen::MatrixXd;

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Signed undirected graph over dense node indices 0..n-1.
// Immutable after construction; no self-loops, no duplicate edges.
// Connectivity is NOT enforced here; use is_connected() before operations
// that require it.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Edges may be given in any endpoint order; they are normalized to u < v
  // but kept in the given sequence. Throws std::invalid_argument on
  // self-loops, duplicates, out-of-range endpoints or signs other than +-1.
  // labels, when non-empty, must have node_count entries.
  SignedGraph(int node_count, std::vector<SignedEdge> edges,
              std::vector<std::string> labels = {});

  int node_count() const noexcept { return node_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Label of node u; the decimal index when the graph is unlabeled.
  std::string label(int u) const;

  // Neighbors of u as (neighbor, sign), sorted by neighbor index.
  const std::vector<std::pair<int, int>>& neighbors(int u) const {
    return adjacency_[static_cast<size_t>(u)];
  }
  int degree(int u) const {
    return static_cast<int>(adjacency_[static_cast<size_t>(u)].size());
  }

  int positive_edge_count() const noexcept { return positive_count_; }
  int negative_edge_count() const noexcept {
    return edge_count() - positive_count_;
  }

  // Sign of edge (u,v), or 0 when the edge is absent.
  int sign_of(int u, int v) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  int node_count_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  int positive_count_ = 0;
};

// Parses the "U V S" edge-list format: one edge per line, labels separated
// by whitespace, sign token one of {+, -, +1, -1, 1}. Lines starting with
// '#' and blank lines are skipped; LF and CRLF both accepted. Node indices
// are assigned in first-appearance order of labels. Throws parse_error
// (with the 1-based line number) on malformed lines, self-loops and
// duplicate edges.
SignedGraph parse_edge_list(const std::string& text);

// Emits "label label sign\n" per edge (sign +| -, LF line ends), edges in
// stored order with the smaller-index endpoint first. parse_edge_list of
// the result reproduces a parsed graph exactly.
std::string serialize_edge_list(const SignedGraph& g);

// True iff the underlying unsigned graph is connected. Empty and
// single-node graphs count as connected.
bool is_connected(const SignedGraph& g);

// A[u][v] = A[v][u] = sign of edge (u,v); 0 elsewhere, zero diagonal.
SignedMatrix signed_adjacency(const SignedGraph& g);

// Diagonal = unsigned degree, off-diagonal (u,v) = -sign(u,v).
// Symmetric positive semi-definite.
SignedMatrix signed_laplacian(const SignedGraph& g);

}  // namespace balviz
