#include "netosc/swing.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "netosc/errors.hpp"

namespace netosc {

namespace {

CouplingConfig swing_config(double gamma) { return {0.0, 1.0, gamma, 0.0}; }

}  // namespace

void PowerProfile::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::InvalidArgument, "damping gamma must be positive");
  }
  if (!p.allFinite()) throw Error(ErrorCode::InvalidArgument, "power vector must be finite");
  const double total = p.sum();
  if (std::abs(total) > kBalanceTol) {
    std::ostringstream msg;
    msg << "power profile is unbalanced: sum(p) = " << total;
    throw Error(ErrorCode::UnbalancedPower, msg.str());
  }
}

Vector load_power_profile(const std::string& path, bool rebalance) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open power profile " + path);
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double v = 0.0;
    if (!(ls >> v)) {
      std::string rest;
      if (std::istringstream(line) >> rest) {
        throw Error(ErrorCode::ParseError,
                    "power profile line " + std::to_string(lineno) + " is not a number");
      }
      continue;
    }
    std::string extra;
    if (ls >> extra) {
      throw Error(ErrorCode::ParseError,
                  "power profile line " + std::to_string(lineno) + " has more than one value");
    }
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorCode::ParseError, "power profile is empty");
  Vector p = Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
  if (rebalance) p.array() -= p.mean();
  return p;
}

Vector steady_state(const Graph& g, const PowerProfile& prof) {
  prof.validate();
  if (static_cast<std::size_t>(prof.p.size()) != g.n()) {
    throw Error(ErrorCode::InvalidArgument, "power vector length does not match the graph");
  }
  const Vector x = pseudo_inverse(laplacian_spectrum(g)) * prof.p;
  const double residual = (laplacian(g) * x - prof.p).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-9)) {
    std::ostringstream msg;
    msg << "steady state residual " << residual;
    throw Error(ErrorCode::SolveFailure, msg.str());
  }
  return x;
}

Trajectory swing_solve(const Graph& g, const PowerProfile& prof, const State& y0,
                       const std::vector<double>& times) {
  steady_state(g, prof);  // validates balance and solvability
  return evolve(g, swing_config(prof.gamma), ConstantPower{prof.p}, y0, times);
}

Trajectory swing_solve_from(const Graph& g, const PowerProfile& prof, const Vector& x_rep,
                            const State& y0, const std::vector<double>& times) {
  prof.validate();
  const auto n = static_cast<Eigen::Index>(g.n());
  if (x_rep.size() != n || prof.p.size() != n || y0.x.size() != n || y0.v.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "vector length does not match the graph");
  }
  const double residual = (laplacian(g) * x_rep - prof.p).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-9)) {
    std::ostringstream msg;
    msg << "representative does not solve L x = p (residual " << residual << ")";
    throw Error(ErrorCode::SolveFailure, msg.str());
  }
  const SpectralDecomposition lap = laplacian_spectrum(g);
  Vector offset(2 * n);
  offset << y0.x - x_rep, y0.v;
  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());
  for (double t : times) {
    const Vector y = expm_via_modes(lap, swing_config(prof.gamma), t) * offset;
    traj.states.push_back({y.head(n) + x_rep, y.tail(n)});
  }
  return traj;
}

TransientMetrics transient_metrics(const Trajectory& traj, std::size_t node) {
  if (traj.size() < 3) throw Error(ErrorCode::InvalidArgument, "trajectory too short");
  if (node >= traj.n()) throw Error(ErrorCode::InvalidArgument, "node outside trajectory");
  const auto i = static_cast<Eigen::Index>(node);
  auto x = [&](std::size_t k) { return traj.states[k].x(i); };

  const std::size_t last = traj.size() - 1;
  const double t_mid = 0.5 * (traj.times.front() + traj.times.back());
  std::size_t mid = 0;
  for (std::size_t k = 0; k <= last; ++k) {
    if (std::abs(traj.times[k] - t_mid) < std::abs(traj.times[mid] - t_mid)) mid = k;
  }
  const double drift = std::abs(x(last) - x(mid));
  if (!(drift < 1e-4)) {
    std::ostringstream msg;
    msg << "node " << node + 1 << " has not settled (drift " << drift << ")";
    throw Error(ErrorCode::NotSettled, msg.str());
  }

  int direction = 0;
  for (std::size_t k = 0; k < last; ++k) {
    const double d = x(k + 1) - x(k);
    const int sign = (d > 0.0) - (d < 0.0);
    if (sign == 0) continue;
    if (direction == 0) {
      direction = sign;
    } else if (sign != direction) {
      return {node, x(k), traj.times[k], x(last)};
    }
  }
  throw Error(ErrorCode::NoPeak, "node " + std::to_string(node + 1) + " has no interior extremum");
}

}  // namespace netosc
