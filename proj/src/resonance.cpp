#include "netosc/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "netosc/errors.hpp"

namespace netosc {

namespace {

void check_node(std::size_t node, std::size_t n, const char* what) {
  if (node >= n) {
    std::ostringstream msg;
    msg << what << ' ' << node + 1 << " outside 1.." << n;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

std::vector<double> resonance_frequencies(const SpectralDecomposition& lap, double c1, double c2) {
  std::vector<double> out(lap.size());
  for (std::size_t i = 0; i < lap.size(); ++i) {
    const double r = c1 + c2 * snapped_eigenvalue(lap, i);
    if (!(r >= 0.0)) {
      std::ostringstream msg;
      msg << "negative radicand " << r << " for mode " << i + 1;
      throw Error(ErrorCode::DomainError, msg.str());
    }
    out[i] = std::sqrt(r);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> resonance_frequencies(const Graph& g, double c1, double c2) {
  return resonance_frequencies(laplacian_spectrum(g), c1, c2);
}

Trajectory forced_undamped(const Graph& g, std::size_t h, double F0, double w,
                           const std::vector<double>& times) {
  check_node(h, g.n(), "source node");
  return evolve(g, regime_config(Regime::Forced), SinusoidDrive{h, F0, w}, State::zeros(g.n()),
                times);
}

Trajectory forced_damped(const Graph& g, std::size_t h, double F0, double w,
                         const std::vector<double>& times) {
  check_node(h, g.n(), "source node");
  return evolve(g, regime_config(Regime::DampedForced), SinusoidDrive{h, F0, w},
                State::zeros(g.n()), times);
}

double influence(const SpectralDecomposition& lap, std::size_t h, std::size_t k, std::size_t i) {
  const std::size_t n = lap.size();
  check_node(h, n, "node");
  check_node(k, n, "node");
  check_node(i, n, "mode");
  return lap.vectors(idx(h), idx(i)) * lap.vectors(idx(k), idx(i));
}

double influence(const Graph& g, std::size_t h, std::size_t k, std::size_t i) {
  return influence(laplacian_spectrum(g), h, k, i);
}

const char* to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Resonant: return "resonant";
    case NodeRole::Transparent: return "transparent";
    case NodeRole::Blocked: return "blocked";
  }
  return "?";
}

ResonanceReport resonance_map(const SpectralDecomposition& lap, std::size_t source,
                              std::size_t mode, double tol) {
  const std::size_t n = lap.size();
  check_node(source, n, "source node");
  check_node(mode, n, "mode");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  ResonanceReport r;
  r.source = source;
  r.mode = mode;
  r.frequencies = resonance_frequencies(lap);
  r.mode_map.resize(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) r.mode_map(idx(i), idx(k)) = influence(lap, source, k, i);
  }

  // Row h of the projector is the part of e_h that the mode can carry.
  const Matrix P = eigenspace_projector(lap, mode);
  const Vector row = P.row(idx(source)).transpose();
  const double reach = std::sqrt(std::max(0.0, P(idx(source), idx(source))));
  r.roles.assign(n, NodeRole::Blocked);
  r.phases.assign(n, 0);
  if (reach < tol) return r;
  for (std::size_t k = 0; k < n; ++k) {
    const double c = row(idx(k)) / reach;
    if (std::abs(c) < tol) {
      r.roles[k] = NodeRole::Transparent;
    } else {
      r.roles[k] = NodeRole::Resonant;
      r.phases[k] = c > 0.0 ? 1 : -1;
    }
  }
  return r;
}

ResonanceReport resonance_map(const Graph& g, std::size_t source, std::size_t mode, double tol) {
  return resonance_map(laplacian_spectrum(g), source, mode, tol);
}

Matrix vibrational_communicability(const SpectralDecomposition& lap) {
  return pseudo_inverse(lap);
}

double vibrational_communicability(const Graph& g, std::size_t h, std::size_t k) {
  check_node(h, g.n(), "node");
  check_node(k, g.n(), "node");
  const SpectralDecomposition lap = laplacian_spectrum(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < lap.size(); ++i) {
    const double mu = snapped_eigenvalue(lap, i);
    if (mu == 0.0) continue;
    sum += influence(lap, h, k, i) / mu;
  }
  return sum;
}

ModeState single_oscillator(double w0, double m, double F0, double w, ForceKind kind, double t) {
  if (!(w0 > 0.0) || !(m > 0.0) || !(w > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "single oscillator needs w0 > 0, m > 0 and w > 0");
  }
  if (kind == ForceKind::Sinusoid) {
    const ModeCoefficients c{w0 * w0, 0.0};
    return mode_solve(c, 0.0, 0.0, ScalarDrive{ScalarDrive::Kind::Sinusoid, F0 / m, w}, t);
  }
  const double pi = std::numbers::pi;
  const double half = pi * w0 / w;
  const double denom = std::sin(half);
  if (std::abs(denom) < 1e-12) {
    throw Error(ErrorCode::ResonantKickSingularity,
                "kick period is a multiple of the natural period");
  }
  const double period = 2.0 * pi / w;
  const double kicks = t < 0.0 ? 0.0 : std::floor(t / period + 1e-12);
  const double phase = w0 * t - (kicks + 1.0) * half;
  const double gain = std::sin(kicks * half) / denom;
  return {F0 / (m * w0) * std::sin(phase) * gain, F0 / m * std::cos(phase) * gain};
}

double envelope_slope(const std::vector<double>& times, const std::vector<double>& values) {
  if (times.size() != values.size() || times.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "envelope needs matching series of length >= 3");
  }
  const double t_half = 0.5 * (times.front() + times.back());
  std::vector<double> pt, pv;
  for (std::size_t k = 1; k + 1 < times.size(); ++k) {
    if (times[k] < t_half) continue;
    const double a = std::abs(values[k - 1]);
    const double b = std::abs(values[k]);
    const double c = std::abs(values[k + 1]);
    if (b > a && b >= c) {
      pt.push_back(times[k]);
      pv.push_back(b);
    }
  }
  if (pt.size() < 2) throw Error(ErrorCode::NoPeak, "fewer than two envelope peaks");
  const double np = static_cast<double>(pt.size());
  double mt = 0.0, mv = 0.0;
  for (std::size_t j = 0; j < pt.size(); ++j) {
    mt += pt[j];
    mv += pv[j];
  }
  mt /= np;
  mv /= np;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t j = 0; j < pt.size(); ++j) {
    sxy += (pt[j] - mt) * (pv[j] - mv);
    sxx += (pt[j] - mt) * (pt[j] - mt);
  }
  if (sxx == 0.0) throw Error(ErrorCode::NoPeak, "envelope peaks share one time");
  return sxy / sxx;
}

std::vector<double> node_series(const Trajectory& traj, std::size_t node) {
  if (traj.states.empty() || node >= traj.n()) {
    throw Error(ErrorCode::InvalidArgument, "node outside trajectory");
  }
  std::vector<double> out(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) out[k] = traj.states[k].x(idx(node));
  return out;
}

}  // namespace netosc
