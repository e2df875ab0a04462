#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "netosc/cli.hpp"
#include "netosc/oracle.hpp"
#include "netosc/trajectory_io.hpp"
#include "test_util.hpp"

using namespace netosc;
using testutil::state;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "netosc");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(TrajectoryCsv, RoundTrip) {
  const Trajectory tr = evolve(testutil::toy4(), {1, 1, 0, 0}, NoDrive{}, state({1, 0, -0.3, 1e-7}, {0, 2.5, 0, 0}),
                               uniform_grid(3, 0.1));
  std::stringstream buf;
  write_trajectory_csv(buf, tr);
  const Trajectory back = read_trajectory_csv(buf);
  ASSERT_EQ(back.size(), tr.size());
  for (std::size_t k = 0; k < tr.size(); ++k) {
    EXPECT_NEAR(back.times[k], tr.times[k], 1e-12 * std::max(1.0, std::abs(tr.times[k])));
    for (Eigen::Index i = 0; i < 4; ++i) {
      EXPECT_NEAR(back.states[k].x(i), tr.states[k].x(i), 1e-11 * std::max(1e-12, std::abs(tr.states[k].x(i))));
      EXPECT_NEAR(back.states[k].v(i), tr.states[k].v(i), 1e-11 * std::max(1e-12, std::abs(tr.states[k].v(i))));
    }
  }
}

TEST(TrajectoryCsv, HeaderAndLineEndings) {
  Trajectory tr;
  tr.times = {0.0};
  tr.states = {state({1, 2}, {3, 4})};
  std::ostringstream out;
  write_trajectory_csv(out, tr);
  EXPECT_EQ(out.str(), "t,x_1,x_2,v_1,v_2\n0,1,2,3,4\n");
  std::istringstream crlf("t,x_1,v_1\r\n0.5,1,-1\r\n");
  const Trajectory back = read_trajectory_csv(crlf);
  EXPECT_EQ(back.times[0], 0.5);
  EXPECT_EQ(back.states[0].v(0), -1.0);
}

TEST(TrajectoryCsv, Malformed) {
  for (const char* text : {"", "t,x_1\n0,1\n", "t,x_1,v_1\n0,1\n", "t,x_1,v_1\n0,a,1\n", "time,x_1,v_1\n0,1,1\n"}) {
    std::istringstream in(text);
    EXPECT_NETOSC_ERROR(read_trajectory_csv(in), ErrorCode::ParseError);
  }
  EXPECT_NETOSC_ERROR(read_trajectory_csv(std::string("/nonexistent/trajectory.csv")), ErrorCode::ParseError);
}

TEST(VectorSpec, Forms) {
  EXPECT_EQ(cli::parse_vector_spec("", 3), Vector::Zero(3));
  EXPECT_EQ(cli::parse_vector_spec("1, 0,-2", 3), (Vector(3) << 1, 0, -2).finished());
  EXPECT_EQ(cli::parse_vector_spec("e:1=4,3=-1", 3), (Vector(3) << 4, 0, -1).finished());
  const auto path = temp_file("netosc_vec.txt", "0.5\n# note\n-0.5\n");
  EXPECT_EQ(cli::parse_vector_spec(path.string(), 2), (Vector(2) << 0.5, -0.5).finished());
  std::filesystem::remove(path);
}

TEST(VectorSpec, Errors) {
  EXPECT_NETOSC_ERROR(cli::parse_vector_spec("1,2", 3), ErrorCode::InvalidArgument);
  EXPECT_NETOSC_ERROR(cli::parse_vector_spec("e:4=1", 3), ErrorCode::InvalidArgument);
  EXPECT_NETOSC_ERROR(cli::parse_vector_spec("e:0=1", 3), ErrorCode::InvalidArgument);
  EXPECT_NETOSC_ERROR(cli::parse_vector_spec("1,x,3", 3), ErrorCode::ParseError);
  EXPECT_NETOSC_ERROR(cli::parse_vector_spec("no_such_file_here.txt", 3), ErrorCode::ParseError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"spectrum"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"spectrum", "--builtin", "toy4", "--graph", "x.txt"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"simulate", "--builtin", "toy4", "--case", "bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsageError);
}

TEST(Cli, DomainErrors) {
  const CliResult r = run_cli({"simulate", "--builtin", "toy4", "--x0", "1,0"});
  EXPECT_EQ(r.code, cli::kDomainError);
  EXPECT_NE(r.err.find("InvalidArgument"), std::string::npos);
  EXPECT_EQ(run_cli({"spectrum", "--builtin", "nosuchgraph"}).code, cli::kDomainError);
  EXPECT_EQ(run_cli({"spectrum", "--graph", "/nonexistent/graph.txt"}).code, cli::kDomainError);
  EXPECT_EQ(run_cli({"swing", "--builtin", "toy4", "--power", "1,1,1,1"}).code, cli::kDomainError);
}

TEST(Cli, Spectrum) {
  const CliResult r = run_cli({"spectrum", "--builtin", "toy4"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("4.000000      2.236068"), std::string::npos);
  EXPECT_NE(r.out.find("algebraic connectivity: 1.000000"), std::string::npos);
  const CliResult z = run_cli({"spectrum", "--builtin", "zachary", "--distinct"});
  ASSERT_EQ(z.code, cli::kOk) << z.err;
}

TEST(Cli, SimulateWritesCsv) {
  const CliResult r = run_cli({"simulate", "--builtin", "toy4", "--case", "damped", "--x0", "e:1=1", "--t-max", "1", "--dt", "0.5"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream in(r.out);
  const Trajectory tr = read_trajectory_csv(in);
  ASSERT_EQ(tr.size(), 3u);
  EXPECT_EQ(tr.states[0].x(0), 1.0);
  EXPECT_EQ(tr.states[0].x(1), 0.0);
  const Trajectory direct = evolve(testutil::toy4(), regime_config(Regime::Damped), NoDrive{}, state({1, 0, 0, 0}, {0, 0, 0, 0}), tr.times);
  EXPECT_NEAR(tr.states[2].x(2), direct.states[2].x(2), 1e-11);
}

TEST(Cli, SimulateMethodsAgree) {
  const std::vector<std::string> base = {"simulate", "--builtin", "toy4", "--case", "forced", "--node", "2", "--omega", "1.3", "--t-max", "2", "--dt", "0.01"};
  auto closed = base;
  closed.insert(closed.end(), {"--method", "closed"});
  auto rk = base;
  rk.insert(rk.end(), {"--method", "rk4"});
  const CliResult a = run_cli(closed), b = run_cli(rk);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  std::istringstream ia(a.out), ib(b.out);
  EXPECT_LT(max_deviation(read_trajectory_csv(ia), read_trajectory_csv(ib)), 1e-8);
}

TEST(Cli, SyncPolarResonanceSwing) {
  const CliResult s = run_cli({"sync", "--builtin", "toy4", "--x0", "e:1=1", "--epsilon", "1e-3"});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  EXPECT_NE(s.out.find("lambda_S: -0.2679492"), std::string::npos);
  const CliResult p = run_cli({"polar", "--builtin", "toy4"});
  ASSERT_EQ(p.code, cli::kOk) << p.err;
  EXPECT_NE(p.out.find("153.4"), std::string::npos);
  const CliResult r = run_cli({"resonance", "--builtin", "toy4", "--source", "1", "--mode", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("transparent"), std::string::npos);
  const CliResult w = run_cli({"swing", "--builtin", "toy4", "--power", "-0.5,-0.2,1.05,-0.35", "--t-max", "100"});
  ASSERT_EQ(w.code, cli::kOk) << w.err;
  EXPECT_NE(w.out.find("0.2625"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliResult a = run_cli({"verify", "--criterion", "3"});
  const CliResult b = run_cli({"verify", "--criterion", "3"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("PASS  [3]"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "--criterion", "12"}).code, cli::kUsageError);
}

TEST(Cli, DataDirectoryLookup) {
  const auto dir = std::filesystem::temp_directory_path() / "netosc_data_dir";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "tri.txt") << "1 2\n2 3\n3 1\n";
  setenv("NETOSC_DATA_DIR", dir.c_str(), 1);
  const CliResult r = run_cli({"spectrum", "--graph", "tri.txt"});
  unsetenv("NETOSC_DATA_DIR");
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("n = 3"), std::string::npos);
  EXPECT_EQ(cli::resolve_data_path("tri.txt"), "tri.txt");
  std::filesystem::remove_all(dir);
}
