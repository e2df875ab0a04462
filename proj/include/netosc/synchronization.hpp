#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "netosc/dynamics.hpp"

namespace netosc {

/// Node-independent limit of the damped network:
///   x~(t) = (cos t sum(x0) + sin t sum(v0)) / n.
State asymptotic_state(const State& y0, double t);

/// Least negative real part of lambda+ over the non-zero Laplacian modes of
/// the alpha-damped network. order = 2 gives the runner-up (repeats count).
double lambda_S(const Graph& g, double alpha = 1.0, std::size_t order = 1);

/// Per-mode real parts Re lambda+(alpha mu_i), i over non-zero modes,
/// sorted from least to most negative.
std::vector<double> decay_rates(const Graph& g, double alpha = 1.0);

struct DominantMode {
  std::size_t mode = 0;          // first Laplacian mode of the dominant block (0-based)
  std::size_t multiplicity = 1;  // size of the block
  double mu = 0.0;
  Complex lambda;                // dominant G eigenvalue
  bool complex_branch = false;   // true when alpha mu < 2
};

struct SyncReport {
  double alpha = 1.0;
  double epsilon = 1e-3;
  double lambda_S = 0.0;
  DominantMode dominant;
  std::vector<double> per_node_bound_times;
  double mean_bound_time = 0.0;
  std::optional<std::vector<double>> empirical_times;
  std::optional<double> empirical_mean;
  std::optional<double> empirical_max;
};

struct SyncOptions {
  /// When the initial state does not excite the dominant block, fall back to
  /// the next slowest one instead of throwing DominantModeUnexcited.
  bool fallback_to_next_mode = false;
};

/// t_i = max(0, log|c_i / eps| / |lambda_S|), c_i being the component of y0
/// along the dominant G eigenvector evaluated at node i.
SyncReport sync_time_bounds(const Graph& g, const State& y0, double epsilon, double alpha = 1.0,
                            const SyncOptions& opts = {});

enum class SettleRule {
  StaysBelow,     // first time after which the deviation stays below eps
  FirstCrossing,  // first time the deviation drops below eps after exceeding it
};

struct EmpiricalSync {
  std::vector<double> per_node;
  double mean = 0.0;
  double max = 0.0;
};

/// Settle time of |x_i(t) - x~_i(t)| below eps, node by node. Throws
/// Unsettled naming the nodes that never settle on the grid.
EmpiricalSync empirical_sync_time(const Trajectory& traj, double epsilon,
                                  SettleRule rule = SettleRule::StaysBelow);

/// Fraction of nodes whose phase-space distance to the asymptotic state is
/// at most eps at grid time t. Throws GridError if t is not on the grid.
double sync_measure(const Trajectory& traj, double t, double epsilon);

/// Simulates the damped network and fills the empirical part of a report.
/// A non-positive horizon selects 3 * max(per-node bound), at least 10.
SyncReport sync_report(const Graph& g, const State& y0, double epsilon, double alpha,
                       bool empirical, double dt = 0.025, double horizon = 0.0,
                       SettleRule rule = SettleRule::StaysBelow, const SyncOptions& opts = {});

}  // namespace netosc
