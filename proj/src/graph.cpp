#include "netosc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "netosc/errors.hpp"

namespace netosc {

namespace {

bool is_connected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (const auto& [a, b] : edges) {
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const auto u = frontier.front();
    frontier.pop();
    for (auto w : nbrs[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

std::size_t parse_node_id(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                           ": '" + std::string(tok) + "' is not an integer");
  }
  if (value < 1) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                           ": node ids are positive (1-based)");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one node");

  std::set<Edge> seen;
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw Error(ErrorCode::InvalidEdge, "endpoint out of range in edge " +
                                              std::to_string(e.first + 1) + "-" +
                                              std::to_string(e.second + 1));
    }
    if (e.first == e.second) {
      throw Error(ErrorCode::InvalidEdge, "self-loop at node " + std::to_string(e.first + 1));
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(e.first + 1) + "-" +
                                                std::to_string(e.second + 1) + " listed twice");
    }
  }
  std::sort(edges.begin(), edges.end());

  if (!is_connected(n, edges)) {
    throw Error(ErrorCode::DisconnectedGraph,
                "graph with " + std::to_string(n) + " nodes is not connected");
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adjacency_ = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& [a, b] : g.edges_) {
    g.adjacency_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = 1.0;
    g.adjacency_(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = 1.0;
  }
  g.degrees_ = g.adjacency_.rowwise().sum();
  return g;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_;
}

Graph from_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t max_id = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected two node ids");
    }
    const auto a = parse_node_id(tokens[0], line_no);
    const auto b = parse_node_id(tokens[1], line_no);
    max_id = std::max({max_id, a, b});
    edges.emplace_back(a - 1, b - 1);
  }

  if (edges.empty()) throw Error(ErrorCode::ParseError, "edge list contains no edges");
  return Graph::from_edges(max_id, std::move(edges));
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open edge-list file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_edge_list(buf.str());
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [a, b] : g.edges()) out << (a + 1) << ' ' << (b + 1) << '\n';
  return out.str();
}

Matrix laplacian(const Graph& g) {
  Matrix lap = -g.adjacency();
  lap.diagonal() += g.degrees();
  return lap;
}

double density(const Graph& g) {
  if (g.n() < 2) throw Error(ErrorCode::UndefinedDensity, "density needs at least two nodes");
  const double n = static_cast<double>(g.n());
  return (g.total_degree() / n) / (n - 1.0);
}

}  // namespace netosc
