#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace netosc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Zero-based node pair. Files and the CLI use 1-based ids; conversion
/// happens at the parsing/printing boundary.
using Edge = std::pair<std::size_t, std::size_t>;

/// Connected, undirected, simple graph. Immutable after construction.
class Graph {
 public:
  /// Validates and builds. Throws InvalidEdge (self-loop or endpoint out of
  /// range), DuplicateEdge, or DisconnectedGraph.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Matrix& adjacency() const noexcept { return adjacency_; }
  const Vector& degrees() const noexcept { return degrees_; }
  double total_degree() const { return degrees_.sum(); }

  bool operator==(const Graph& other) const;

 private:
  Graph() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  Matrix adjacency_;
  Vector degrees_;
};

/// Parses an edge-list document: one `a b` pair of 1-based ids per line,
/// `#` comments, blank lines ignored. n is the largest id seen.
Graph from_edge_list(std::string_view text);

/// Reads an edge-list file from disk.
Graph load_edge_list(const std::string& path);

/// Inverse of from_edge_list (1-based, one edge per line, sorted).
std::string render_edge_list(const Graph& g);

/// L = K - A.
Matrix laplacian(const Graph& g);

/// k_mean / (n - 1). Throws UndefinedDensity for n == 1.
double density(const Graph& g);

// ---------------------------------------------------------------------------
// Builtin datasets
// ---------------------------------------------------------------------------

struct NetworkDataset {
  std::string name;
  std::size_t n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, as published
  std::optional<std::vector<double>> expected_spectrum;
  std::string description;
};

/// Recognised ids:
///   toy4                 four-node example (triangle 1-2-3 with pendant 4)
///   path:N cycle:N complete:N
///   zachary              karate club, 34 nodes / 78 edges
///   syncnet:A .. syncnet:F   the six small synchronization-time networks
/// Throws UnknownDataset otherwise.
NetworkDataset builtin_dataset(std::string_view name);

Graph builtin(std::string_view name);

Graph to_graph(const NetworkDataset& ds);

}  // namespace netosc
