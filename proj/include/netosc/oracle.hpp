#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "netosc/dynamics.hpp"

namespace netosc {

/// Samples of a generic first-order run y' = A y + b(t).
struct LinearRun {
  std::vector<double> times;
  std::vector<Vector> states;
};

/// Classical fixed-step RK4. Samples every `sample_every` steps plus the
/// final step. Throws NumericalBlowup on a non-finite state.
LinearRun rk4_linear(const Matrix& A, const std::function<Vector(double)>& forcing,
                     const Vector& y0, double dt, double horizon, std::size_t sample_every = 1);

/// RK4 on y' = G y + b(t) for a network configuration and drive.
Trajectory rk4_integrate(const Graph& g, const CouplingConfig& cfg, const DriveSpec& drive,
                         const State& y0, double dt, double horizon, std::size_t sample_every = 1);

/// Largest absolute difference over all samples, positions and velocities.
/// Throws GridMismatch when the time grids differ.
double max_deviation(const Trajectory& a, const Trajectory& b);

}  // namespace netosc
