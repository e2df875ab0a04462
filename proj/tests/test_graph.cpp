#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "netosc/graph.hpp"
#include "netosc/spectral.hpp"
#include "test_util.hpp"

using namespace netosc;

namespace {

Vector sorted_spectrum(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(laplacian(g));
  Vector v = es.eigenvalues();
  std::sort(v.data(), v.data() + v.size(), std::greater<>());
  return v;
}

const char* kBuiltins[] = {"toy4",       "zachary",    "path:1",     "path:6",     "cycle:5",
                           "complete:4", "syncnet:A", "syncnet:B", "syncnet:C", "syncnet:D",
                           "syncnet:E", "syncnet:F"};

}  // namespace

TEST(EdgeList, ParsesToyNetwork) {
  const Graph g = from_edge_list("1 2\n1 3\n2 3\n3 4");
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.degrees(), (Vector(4) << 2, 2, 3, 1).finished());
  const Vector mu = sorted_spectrum(g);
  const Vector expected = (Vector(4) << 4, 3, 1, 0).finished();
  EXPECT_LT((mu - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(EdgeList, ParsesPath) {
  const Graph g = from_edge_list("1 2\n2 3\n3 4\n");
  EXPECT_EQ(g.degrees(), (Vector(4) << 1, 2, 2, 1).finished());
}

TEST(EdgeList, CommentsAndBlankLines) {
  const Graph g = from_edge_list("# header\n\n1 2   # first\n\t2 3\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.edges().size(), 2u);
}

TEST(EdgeList, Errors) {
  EXPECT_NETOSC_ERROR(from_edge_list("1 1"), ErrorCode::InvalidEdge);
  EXPECT_NETOSC_ERROR(from_edge_list("1 2\n2 1"), ErrorCode::DuplicateEdge);
  EXPECT_NETOSC_ERROR(from_edge_list("1 2\n1 2"), ErrorCode::DuplicateEdge);
  EXPECT_NETOSC_ERROR(from_edge_list("1 2\n3 4"), ErrorCode::DisconnectedGraph);
  EXPECT_NETOSC_ERROR(from_edge_list("1 x"), ErrorCode::ParseError);
  EXPECT_NETOSC_ERROR(from_edge_list("1 2.5"), ErrorCode::ParseError);
  EXPECT_NETOSC_ERROR(from_edge_list("0 1"), ErrorCode::ParseError);
  EXPECT_NETOSC_ERROR(from_edge_list("1 2 3"), ErrorCode::ParseError);
  EXPECT_NETOSC_ERROR(from_edge_list("# nothing\n"), ErrorCode::ParseError);
}

TEST(Graph, FromEdgesValidates) {
  EXPECT_NETOSC_ERROR(Graph::from_edges(3, {{0, 3}}), ErrorCode::InvalidEdge);
  EXPECT_NETOSC_ERROR(Graph::from_edges(0, {}), ErrorCode::InvalidArgument);
  const Graph a = Graph::from_edges(3, {{1, 0}, {2, 1}});
  const Graph b = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(a == b);
}

TEST(Builtin, ToyEdges) {
  const NetworkDataset ds = builtin_dataset("toy4");
  const std::vector<std::pair<int, int>> expected = {{1, 2}, {1, 3}, {2, 3}, {3, 4}};
  EXPECT_EQ(ds.edges, expected);
  ASSERT_TRUE(ds.expected_spectrum.has_value());
  const Vector mu = sorted_spectrum(to_graph(ds));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(mu(static_cast<Eigen::Index>(i)), (*ds.expected_spectrum)[i], 1e-12);
}

TEST(Builtin, ToyEigenvectorMatrix) {
  // Columns: (-1,-1,3,-1)/sqrt12, (1,-1,0,0)/sqrt2, (1,1,0,-2)/sqrt6, u/2 up to sign.
  const SpectralDecomposition d = laplacian_spectrum(builtin("toy4"));
  Matrix M(4, 4);
  M << -1 / std::sqrt(12.0), 1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 0.5,
       -1 / std::sqrt(12.0), -1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 0.5,
       3 / std::sqrt(12.0), 0, 0, 0.5,
       -1 / std::sqrt(12.0), 0, -2 / std::sqrt(6.0), 0.5;
  for (int c = 0; c < 4; ++c) {
    const double dot = std::abs(M.col(c).dot(d.vectors.col(c)));
    EXPECT_NEAR(dot, 1.0, 1e-12) << "column " << c;
  }
}

TEST(Builtin, Complete) {
  const Graph g = builtin("complete:4");
  EXPECT_EQ(g.degrees(), Vector::Constant(4, 3.0));
  const Matrix L = laplacian(g);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(L(i, j), i == j ? 3.0 : -1.0);
  }
}

TEST(Builtin, Zachary) {
  const Graph g = builtin("zachary");
  EXPECT_EQ(g.n(), 34u);
  EXPECT_EQ(g.edges().size(), 78u);
  EXPECT_DOUBLE_EQ(g.total_degree(), 156.0);
  EXPECT_NEAR(sorted_spectrum(g)(0), 18.137, 5e-4);
  EXPECT_NEAR(density(g), 156.0 / 34.0 / 33.0, 1e-15);
}

TEST(Builtin, SyncNetworksMatchQuotedSpectra) {
  // B shares the toy spectrum; E has top eigenvalues 5 and 4.
  const Vector b = sorted_spectrum(builtin("syncnet:B"));
  EXPECT_LT((b - (Vector(4) << 4, 3, 1, 0).finished()).cwiseAbs().maxCoeff(), 1e-12);
  const Vector e = sorted_spectrum(builtin("syncnet:E"));
  EXPECT_NEAR(e(0), 5.0, 1e-12);
  EXPECT_NEAR(e(1), 4.0, 1e-12);
  EXPECT_EQ(builtin("syncnet:C"), builtin("complete:4"));
  EXPECT_EQ(builtin("syncnet:F"), builtin("complete:5"));
  EXPECT_EQ(builtin("syncnet:A"), builtin("path:4"));
  EXPECT_EQ(builtin("syncnet:D"), builtin("path:5"));
}

TEST(Builtin, UnknownNames) {
  for (const char* bad : {"toy5", "path:0", "cycle:2", "complete:x", "syncnet:G", ""}) {
    EXPECT_NETOSC_ERROR(builtin(bad), ErrorCode::UnknownDataset);
  }
}

TEST(Laplacian, BasicIdentities) {
  const Matrix L = laplacian(builtin("toy4"));
  EXPECT_DOUBLE_EQ(L.trace(), 8.0);
  for (const char* name : kBuiltins) {
    const Graph g = builtin(name);
    const Matrix Lg = laplacian(g);
    EXPECT_EQ(Lg, Lg.transpose()) << name;
    EXPECT_LT((Lg * Vector::Ones(static_cast<Eigen::Index>(g.n()))).cwiseAbs().maxCoeff(), 1e-15) << name;
    const Vector mu = sorted_spectrum(g);
    EXPECT_GE(mu.minCoeff(), -1e-10) << name;
    const long nullity = (mu.array().abs() < 1e-9).count();
    EXPECT_EQ(nullity, 1) << name;
  }
}

TEST(Laplacian, AlgebraicConnectivityBound) {
  for (const char* name : kBuiltins) {
    const Graph g = builtin(name);
    if (g.n() < 2) continue;
    const Vector mu = sorted_spectrum(g);
    const double kmin = g.degrees().minCoeff();
    const double n = static_cast<double>(g.n());
    const double a = mu(mu.size() - 2);
    EXPECT_LE(a, n / (n - 1.0) * kmin + 1e-9) << name;
    EXPECT_LE(a, n * density(g) + 1e-9) << name;
  }
}

TEST(Density, Examples) {
  EXPECT_DOUBLE_EQ(density(builtin("complete:4")), 1.0);
  EXPECT_DOUBLE_EQ(density(builtin("path:4")), 0.5);
  EXPECT_NETOSC_ERROR(density(builtin("path:1")), ErrorCode::UndefinedDensity);
}

TEST(EdgeList, RoundTripsEveryBuiltin) {
  for (const char* name : kBuiltins) {
    const Graph g = builtin(name);
    if (g.edges().empty()) continue;
    EXPECT_EQ(from_edge_list(render_edge_list(g)), g) << name;
  }
}

TEST(EdgeList, LoadMissingFile) {
  EXPECT_NETOSC_ERROR(load_edge_list("/nonexistent/edges.txt"), ErrorCode::ParseError);
}
