#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netosc/dynamics.hpp"

namespace netosc {

/// Tolerance on sum(p) for a balanced profile.
inline constexpr double kBalanceTol = 1e-9;

struct PowerProfile {
  Vector p;            // generators positive, loads negative
  double gamma = 1.0;  // common damping

  /// Throws InvalidArgument (bad gamma / non-finite p) or UnbalancedPower.
  void validate() const;
};

/// Reads one real per line ('#' comments allowed). With `rebalance` the
/// mean is subtracted; otherwise the balance check is left to the caller.
Vector load_power_profile(const std::string& path, bool rebalance = false);

/// Minimum-norm solution of L x = p.
Vector steady_state(const Graph& g, const PowerProfile& prof);

/// Exact solution of x'' = -gamma x' - L x + p, mode by mode.
Trajectory swing_solve(const Graph& g, const PowerProfile& prof, const State& y0,
                       const std::vector<double>& times);

/// y(t) = y~ + e^{Gt}(y0 - y~) with y~ = (x_rep, 0) for any solution x_rep of
/// L x = p. Throws SolveFailure if x_rep is not one.
Trajectory swing_solve_from(const Graph& g, const PowerProfile& prof, const Vector& x_rep,
                            const State& y0, const std::vector<double>& times);

struct TransientMetrics {
  std::size_t node = 0;  // 0-based
  double first_peak_value = 0.0;
  double first_peak_time = 0.0;
  double steady_state_value = 0.0;
};

/// First local extremum of x_node on the grid and the final value.
/// Throws NotSettled if |x(t_end) - x(t_end/2)| >= 1e-4, NoPeak if monotone.
TransientMetrics transient_metrics(const Trajectory& traj, std::size_t node);

}  // namespace netosc
