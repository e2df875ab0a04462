#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "netosc/oracle.hpp"
#include "netosc/swing.hpp"
#include "test_util.hpp"

using namespace netosc;
using testutil::toy4;

namespace {

PowerProfile toy_profile(double gamma = 1.0) {
  return {(Vector(4) << -0.50, -0.20, 1.05, -0.35).finished(), gamma};
}

const Vector kToyLimit = (Vector(4) << -0.1375, -0.0375, 0.2625, -0.0875).finished();

}  // namespace

TEST(SteadyState, ToyProfile) {
  const Graph g = toy4();
  const Vector x = steady_state(g, toy_profile());
  EXPECT_LT((laplacian(g) * x - toy_profile().p).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(x.sum(), 0.0, 1e-12);
  // The quoted representative differs by a constant shift.
  const Vector quoted = (Vector(4) << -0.25, -0.15, 0.15, -0.20).finished();
  const Vector diff = quoted - x;
  EXPECT_LT(diff.maxCoeff() - diff.minCoeff(), 1e-12);
  EXPECT_LT((laplacian(g) * quoted - toy_profile().p).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SteadyState, ZeroProfile) {
  EXPECT_EQ(steady_state(toy4(), {Vector::Zero(4), 1.0}).cwiseAbs().maxCoeff(), 0.0);
}

TEST(SteadyState, RandomBalancedProfiles) {
  std::mt19937 rng(7);
  std::normal_distribution<double> normal;
  const Graph g = toy4();
  const Matrix L = laplacian(g);
  for (int trial = 0; trial < 100; ++trial) {
    Vector p(4);
    for (Eigen::Index i = 0; i < 4; ++i) p(i) = normal(rng);
    p.array() -= p.mean();
    const Vector x = steady_state(g, {p, 1.0});
    EXPECT_LT((L * x - p).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(SteadyState, Validation) {
  EXPECT_NETOSC_ERROR(steady_state(toy4(), {Vector::Ones(4), 1.0}), ErrorCode::UnbalancedPower);
  EXPECT_NETOSC_ERROR(steady_state(toy4(), {Vector::Zero(3), 1.0}), ErrorCode::InvalidArgument);
  EXPECT_NETOSC_ERROR((PowerProfile{Vector::Zero(4), 0.0}.validate()), ErrorCode::InvalidArgument);
}

TEST(SwingSolve, StartsAtInitialState) {
  const Trajectory tr = swing_solve(toy4(), toy_profile(), State::zeros(4), {0.0, 1.0});
  EXPECT_EQ(tr.states[0].x, Vector::Zero(4));
  EXPECT_EQ(tr.states[0].v, Vector::Zero(4));
}

TEST(SwingSolve, ConvergesToShiftedSteadyState) {
  const Trajectory tr = swing_solve(toy4(), toy_profile(), State::zeros(4), {100.0});
  EXPECT_LT((tr.states[0].x - kToyLimit).cwiseAbs().maxCoeff(), 1e-9);
  const Trajectory rk = rk4_integrate(toy4(), {0, 1, 1, 0}, ConstantPower{toy_profile().p}, State::zeros(4), 1e-2, 100.0, 10000);
  EXPECT_LT((rk.states.back().x - kToyLimit).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(SwingSolve, MatchesRK4) {
  for (double gamma : {0.4, 1.0}) {
    const Trajectory rk = rk4_integrate(toy4(), {0, 1, gamma, 0}, ConstantPower{toy_profile().p}, State::zeros(4), 1e-3, 30.0, 200);
    const Trajectory cf = swing_solve(toy4(), toy_profile(gamma), State::zeros(4), rk.times);
    EXPECT_LT(max_deviation(cf, rk), 1e-6) << gamma;
  }
}

TEST(SwingSolve, ZeroModeStaysAtRest) {
  const Trajectory tr = swing_solve(builtin("zachary"),
                                    {[] {
                                       Vector p = Vector::LinSpaced(34, -1.0, 1.0);
                                       return Vector(p.array() - p.mean());
                                     }(),
                                     0.7},
                                    State::zeros(34), uniform_grid(40, 0.5));
  for (const State& s : tr.states) EXPECT_NEAR(s.x.mean(), 0.0, 1e-10);
}

TEST(SwingSolve, RepresentativeDoesNotMatter) {
  const Graph g = toy4();
  const auto times = uniform_grid(30, 0.1);
  const Trajectory base = swing_solve(g, toy_profile(), State::zeros(4), times);
  const Vector x = steady_state(g, toy_profile());
  for (double w : {-3.0, 7.0}) {
    const Trajectory alt = swing_solve_from(g, toy_profile(), x + Vector::Constant(4, w), State::zeros(4), times);
    EXPECT_LT(max_deviation(base, alt), 1e-10) << w;
  }
  EXPECT_NETOSC_ERROR(swing_solve_from(g, toy_profile(), Vector::Zero(4), State::zeros(4), times),
                      ErrorCode::SolveFailure);
}

TEST(SwingSolve, LighterDampingOvershootsMore) {
  const auto times = uniform_grid(100, 0.1);
  const Trajectory heavy = swing_solve(toy4(), toy_profile(1.0), State::zeros(4), times);
  const Trajectory light = swing_solve(toy4(), toy_profile(0.4), State::zeros(4), times);
  for (std::size_t k = 0; k < 4; ++k) {
    const TransientMetrics h = transient_metrics(heavy, k);
    const TransientMetrics l = transient_metrics(light, k);
    EXPECT_GT(std::abs(l.first_peak_value - l.steady_state_value), std::abs(h.first_peak_value - h.steady_state_value)) << k;
  }
}

TEST(TransientMetrics, NodeThree) {
  const Trajectory tr = swing_solve(toy4(), toy_profile(), State::zeros(4), uniform_grid(100, 0.1));
  const TransientMetrics m = transient_metrics(tr, 2);
  EXPECT_EQ(m.node, 2u);
  EXPECT_NEAR(m.steady_state_value, 0.2625, 1e-3);
  EXPECT_GT(m.first_peak_value, m.steady_state_value);
  EXPECT_GT(m.first_peak_time, 0.0);
  EXPECT_LT(m.first_peak_time, 100.0);
  // Peak time sits on the grid.
  EXPECT_NEAR(std::fmod(m.first_peak_time + 1e-9, 0.1), 0.0, 1e-8);
}

TEST(TransientMetrics, MonotoneDecayHasNoPeak) {
  const SpectralDecomposition lap = laplacian_spectrum(toy4());
  State y0 = State::zeros(4);
  y0.x = lap.vector(2);  // mu = 1; gamma = 5 is overdamped
  const Trajectory tr = swing_solve(toy4(), {Vector::Zero(4), 5.0}, y0, uniform_grid(100, 0.1));
  Eigen::Index node = 0;
  y0.x.cwiseAbs().maxCoeff(&node);
  EXPECT_NETOSC_ERROR(transient_metrics(tr, static_cast<std::size_t>(node)), ErrorCode::NoPeak);
}

TEST(TransientMetrics, UnsettledTrajectory) {
  const Trajectory tr = swing_solve(toy4(), toy_profile(), State::zeros(4), uniform_grid(5, 0.1));
  EXPECT_NETOSC_ERROR(transient_metrics(tr, 2), ErrorCode::NotSettled);
}

TEST(TransientMetrics, InvariantUnderRepresentative) {
  const auto times = uniform_grid(60, 0.1);
  const Vector x = steady_state(toy4(), toy_profile());
  const Trajectory a = swing_solve(toy4(), toy_profile(), State::zeros(4), times);
  const Trajectory b = swing_solve_from(toy4(), toy_profile(), x + Vector::Constant(4, 7.0), State::zeros(4), times);
  for (std::size_t k = 0; k < 4; ++k) {
    const TransientMetrics ma = transient_metrics(a, k);
    const TransientMetrics mb = transient_metrics(b, k);
    EXPECT_EQ(ma.first_peak_time, mb.first_peak_time);
    EXPECT_NEAR(ma.first_peak_value, mb.first_peak_value, 1e-10);
    EXPECT_NEAR(ma.steady_state_value, mb.steady_state_value, 1e-10);
  }
}

TEST(PowerProfileFile, LoadAndRebalance) {
  const auto path = std::filesystem::temp_directory_path() / "netosc_power_test.txt";
  {
    std::ofstream out(path);
    out << "# toy profile\n-0.5\n-0.2\n1.05\n\n-0.25\n";
  }
  const Vector raw = load_power_profile(path.string());
  ASSERT_EQ(raw.size(), 4);
  EXPECT_NEAR(raw.sum(), 0.1, 1e-12);
  EXPECT_NETOSC_ERROR((PowerProfile{raw, 1.0}.validate()), ErrorCode::UnbalancedPower);
  const Vector fixed = load_power_profile(path.string(), true);
  EXPECT_NEAR(fixed.sum(), 0.0, 1e-12);
  EXPECT_NEAR(fixed(2), 1.05 - 0.025, 1e-12);
  {
    std::ofstream out(path);
    out << "0.5\nabc\n";
  }
  EXPECT_NETOSC_ERROR(load_power_profile(path.string()), ErrorCode::ParseError);
  std::filesystem::remove(path);
  EXPECT_NETOSC_ERROR(load_power_profile(path.string()), ErrorCode::ParseError);
}
