#include "netosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netosc/errors.hpp"

namespace netosc {

LinearRun rk4_linear(const Matrix& A, const std::function<Vector(double)>& forcing,
                     const Vector& y0, double dt, double horizon, std::size_t sample_every) {
  if (!(dt > 0.0) || !(horizon > 0.0) || !std::isfinite(dt) || !std::isfinite(horizon)) {
    throw Error(ErrorCode::InvalidArgument, "rk4 needs dt > 0 and horizon > 0");
  }
  if (sample_every == 0) throw Error(ErrorCode::InvalidArgument, "sample_every must be >= 1");
  if (A.rows() != A.cols() || A.rows() != y0.size()) {
    throw Error(ErrorCode::InvalidArgument, "rk4 dimension mismatch");
  }
  const double ratio = horizon / dt;
  const auto steps = static_cast<std::size_t>(std::llround(ratio));
  if (steps == 0 || std::abs(ratio - static_cast<double>(steps)) > 1e-6 * std::max(1.0, ratio)) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be an integer multiple of dt");
  }

  auto rhs = [&](double t, const Vector& y) -> Vector {
    Vector dy = A * y;
    if (forcing) dy += forcing(t);
    return dy;
  };

  LinearRun run;
  run.times.push_back(0.0);
  run.states.push_back(y0);
  Vector y = y0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const Vector k1 = rhs(t, y);
    const Vector k2 = rhs(t + 0.5 * dt, y + 0.5 * dt * k1);
    const Vector k3 = rhs(t + 0.5 * dt, y + 0.5 * dt * k2);
    const Vector k4 = rhs(t + dt, y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double t_next = static_cast<double>(k + 1) * dt;
    if (!y.allFinite()) {
      std::ostringstream msg;
      msg << "non-finite state at t = " << t_next;
      throw Error(ErrorCode::NumericalBlowup, msg.str());
    }
    if ((k + 1) % sample_every == 0 || k + 1 == steps) {
      run.times.push_back(t_next);
      run.states.push_back(y);
    }
  }
  return run;
}

Trajectory rk4_integrate(const Graph& g, const CouplingConfig& cfg, const DriveSpec& drive,
                         const State& y0, double dt, double horizon, std::size_t sample_every) {
  const auto n = static_cast<Eigen::Index>(g.n());
  if (y0.x.size() != n || y0.v.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "initial state length does not match the graph");
  }
  const Matrix G = build_G(g, cfg);

  std::function<Vector(double)> forcing;
  if (const auto* s = std::get_if<SinusoidDrive>(&drive)) {
    if (s->node >= g.n()) throw Error(ErrorCode::InvalidArgument, "drive node out of range");
    const Eigen::Index row = n + static_cast<Eigen::Index>(s->node);
    const double amp = s->amplitude;
    const double w = s->frequency;
    forcing = [row, amp, w, n](double t) {
      Vector b = Vector::Zero(2 * n);
      b(row) = amp * std::sin(w * t);
      return b;
    };
  } else if (const auto* p = std::get_if<ConstantPower>(&drive)) {
    if (p->p.size() != n) throw Error(ErrorCode::InvalidArgument, "power vector length mismatch");
    Vector b = Vector::Zero(2 * n);
    b.tail(n) = p->p;
    forcing = [b](double) { return b; };
  }

  Vector y(2 * n);
  y << y0.x, y0.v;
  const LinearRun run = rk4_linear(G, forcing, y, dt, horizon, sample_every);

  Trajectory traj;
  traj.times = run.times;
  traj.states.reserve(run.states.size());
  for (const Vector& s : run.states) traj.states.push_back({s.head(n), s.tail(n)});
  return traj;
}

double max_deviation(const Trajectory& a, const Trajectory& b) {
  if (a.times.size() != b.times.size()) {
    throw Error(ErrorCode::GridMismatch, "trajectories have different sample counts");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.times.size(); ++k) {
    const double ta = a.times[k];
    const double tb = b.times[k];
    if (std::abs(ta - tb) > 1e-9 * std::max(1.0, std::abs(ta))) {
      std::ostringstream msg;
      msg << "time grids differ at sample " << k << " (" << ta << " vs " << tb << ")";
      throw Error(ErrorCode::GridMismatch, msg.str());
    }
    const State& sa = a.states[k];
    const State& sb = b.states[k];
    if (sa.x.size() != sb.x.size() || sa.v.size() != sb.v.size()) {
      throw Error(ErrorCode::GridMismatch, "trajectories have different dimensions");
    }
    worst = std::max(worst, (sa.x - sb.x).cwiseAbs().maxCoeff());
    worst = std::max(worst, (sa.v - sb.v).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace netosc
