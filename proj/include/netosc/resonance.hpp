#pragma once

#include <cstddef>
#include <vector>

#include "netosc/dynamics.hpp"

namespace netosc {

/// sqrt(c1 + c2 mu_i), descending. Throws DomainError on a negative radicand.
std::vector<double> resonance_frequencies(const Graph& g, double c1 = 1.0, double c2 = 1.0);
std::vector<double> resonance_frequencies(const SpectralDecomposition& lap, double c1 = 1.0,
                                          double c2 = 1.0);

/// Response of the undamped coupled network (c1 = c2 = 1) at rest to
/// F0 sin(w t) on node h (0-based).
Trajectory forced_undamped(const Graph& g, std::size_t h, double F0, double w,
                           const std::vector<double>& times);

/// Same for the damped network (c1 = 1, c2' = 1).
Trajectory forced_damped(const Graph& g, std::size_t h, double F0, double w,
                         const std::vector<double>& times);

/// phi_i(h) phi_i(k) for mode i (all indices 0-based).
double influence(const SpectralDecomposition& lap, std::size_t h, std::size_t k, std::size_t i);
double influence(const Graph& g, std::size_t h, std::size_t k, std::size_t i);

enum class NodeRole { Resonant, Transparent, Blocked };

const char* to_string(NodeRole role);

struct ResonanceReport {
  std::size_t source = 0;  // 0-based
  std::size_t mode = 0;    // 0-based
  std::vector<double> frequencies;
  Matrix mode_map;  // (mode, node) -> influence of the source on that node
  std::vector<NodeRole> roles;
  std::vector<int> phases;  // +1, 0, -1 relative to the source
};

/// Classifies nodes for a resonance of `mode` driven from `source`, using
/// the eigenspace projector so degenerate modes are handled consistently.
ResonanceReport resonance_map(const Graph& g, std::size_t source, std::size_t mode,
                              double tol = 1e-6);
ResonanceReport resonance_map(const SpectralDecomposition& lap, std::size_t source,
                              std::size_t mode, double tol = 1e-6);

/// L+_{hk}.
double vibrational_communicability(const Graph& g, std::size_t h, std::size_t k);
Matrix vibrational_communicability(const SpectralDecomposition& lap);

enum class ForceKind { Sinusoid, DeltaTrain };

/// Single oscillator of mass m and natural frequency w0, at rest at t = 0.
/// Sinusoid: F0 sin(w t). DeltaTrain: kicks of size F0 at t = 2 pi k / w,
/// k >= 1. Throws ResonantKickSingularity when sin(pi w0 / w) vanishes.
ModeState single_oscillator(double w0, double m, double F0, double w, ForceKind kind, double t);

/// Least-squares slope of the peaks of |x| found over the second half of
/// the time range. Throws NoPeak when fewer than two peaks exist.
double envelope_slope(const std::vector<double>& times, const std::vector<double>& values);

/// Positions of one node along a trajectory.
std::vector<double> node_series(const Trajectory& traj, std::size_t node);

}  // namespace netosc
