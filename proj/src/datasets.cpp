#include <charconv>
#include <string>

#include "netosc/errors.hpp"
#include "netosc/graph.hpp"

namespace netosc {

namespace {

// Zachary karate club, 1-based, 78 edges.
constexpr std::pair<int, int> kZacharyEdges[] = {
    {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {1, 8},   {1, 9},
    {1, 11},  {1, 12},  {1, 13},  {1, 14},  {1, 18},  {1, 20},  {1, 22},  {1, 32},
    {2, 3},   {2, 4},   {2, 8},   {2, 14},  {2, 18},  {2, 20},  {2, 22},  {2, 31},
    {3, 4},   {3, 8},   {3, 9},   {3, 10},  {3, 14},  {3, 28},  {3, 29},  {3, 33},
    {4, 8},   {4, 13},  {4, 14},  {5, 7},   {5, 11},  {6, 7},   {6, 11},  {6, 17},
    {7, 17},  {9, 31},  {9, 33},  {9, 34},  {10, 34}, {14, 34}, {15, 33}, {15, 34},
    {16, 33}, {16, 34}, {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33},
    {23, 34}, {24, 26}, {24, 28}, {24, 30}, {24, 33}, {24, 34}, {25, 26}, {25, 28},
    {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32}, {29, 34}, {30, 33},
    {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34}, {33, 34},
};

// Distinct Laplacian eigenvalues of the karate club as tabulated (3 decimals).
const std::vector<double> kZacharyDistinctSpectrum = {
    18.137, 17.055, 13.306, 10.921, 9.777, 6.996, 6.516, 6.332, 5.618, 5.379,
    4.581,  4.480,  4.276,  3.472,  3.382, 3.376, 3.242, 3.014, 2.749, 2.487,
    2.000,  1.955,  1.826,  1.762,  1.599, 1.259, 1.125, 0.909, 0.468, 0.0,
};

std::size_t parse_size(std::string_view name, std::string_view arg) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size() || value == 0) {
    throw Error(ErrorCode::UnknownDataset, "bad size in dataset id '" + std::string(name) + "'");
  }
  return value;
}

NetworkDataset path(std::size_t n) {
  NetworkDataset ds{"path:" + std::to_string(n), n, {}, std::nullopt, "path graph"};
  for (std::size_t i = 1; i < n; ++i) ds.edges.emplace_back(int(i), int(i + 1));
  return ds;
}

NetworkDataset cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::UnknownDataset, "cycle needs at least 3 nodes");
  NetworkDataset ds{"cycle:" + std::to_string(n), n, {}, std::nullopt, "cycle graph"};
  for (std::size_t i = 1; i < n; ++i) ds.edges.emplace_back(int(i), int(i + 1));
  ds.edges.emplace_back(int(n), 1);
  return ds;
}

NetworkDataset complete(std::size_t n) {
  NetworkDataset ds{"complete:" + std::to_string(n), n, {}, std::nullopt, "complete graph"};
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) ds.edges.emplace_back(int(i), int(j));
  return ds;
}

NetworkDataset toy4() {
  return {"toy4", 4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}, std::vector<double>{4, 3, 1, 0},
          "triangle 1-2-3 with pendant node 4"};
}

// The six small networks used to compare synchronization times. They are
// published only as drawings; these identifications reproduce every quoted
// dominant decay rate:
//   A path P4          spectrum {2+sqrt2, 2, 2-sqrt2, 0}
//   B toy4 (paw)       {4, 3, 1, 0}
//   C complete K4      {4, 4, 4, 0}
//   D path P5          {3.618, 2.618, 1.382, 0.382, 0}
//   E K4 plus pendant  {5, 4, 4, 1, 0}
//   F complete K5      {5, 5, 5, 5, 0}
NetworkDataset syncnet(std::string_view which) {
  NetworkDataset ds;
  if (which == "A") {
    ds = path(4);
  } else if (which == "B") {
    ds = toy4();
  } else if (which == "C") {
    ds = complete(4);
  } else if (which == "D") {
    ds = path(5);
  } else if (which == "E") {
    ds = {"", 5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}},
          std::vector<double>{5, 4, 4, 1, 0}, "complete K4 with pendant node 5"};
  } else if (which == "F") {
    ds = complete(5);
  } else {
    throw Error(ErrorCode::UnknownDataset, "syncnet id must be one of A..F");
  }
  ds.name = "syncnet:" + std::string(which);
  return ds;
}

}  // namespace

NetworkDataset builtin_dataset(std::string_view name) {
  if (name == "toy4") return toy4();
  if (name == "zachary") {
    NetworkDataset ds{"zachary", 34, {}, kZacharyDistinctSpectrum, "Zachary karate club"};
    ds.edges.assign(std::begin(kZacharyEdges), std::end(kZacharyEdges));
    return ds;
  }
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const auto family = name.substr(0, colon);
    const auto arg = name.substr(colon + 1);
    if (family == "path") return path(parse_size(name, arg));
    if (family == "cycle") return cycle(parse_size(name, arg));
    if (family == "complete") return complete(parse_size(name, arg));
    if (family == "syncnet") return syncnet(arg);
  }
  throw Error(ErrorCode::UnknownDataset, "unknown dataset '" + std::string(name) + "'");
}

Graph to_graph(const NetworkDataset& ds) {
  std::vector<Edge> edges;
  edges.reserve(ds.edges.size());
  for (const auto& [a, b] : ds.edges) {
    if (a < 1 || b < 1) throw Error(ErrorCode::InvalidEdge, "node ids are 1-based");
    edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  return Graph::from_edges(ds.n, std::move(edges));
}

Graph builtin(std::string_view name) { return to_graph(builtin_dataset(name)); }

}  // namespace netosc
