#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "netosc/graph.hpp"
#include "netosc/spectral.hpp"

namespace netosc {

using Complex = std::complex<double>;

/// Coefficients of the state matrix
///   G = [[0, I], [-(c1 I + c2 L), -(c1p I + c2p L)]].
struct CouplingConfig {
  double c1 = 0.0;   // spring to the support
  double c2 = 0.0;   // spring between neighbours
  double c1p = 0.0;  // damping on each node
  double c2p = 0.0;  // damping between neighbours

  /// Throws InvalidArgument unless all entries are finite, non-negative
  /// and at least one is positive.
  void validate() const;
};

/// The five network systems studied.
enum class Regime { Coupled, Damped, Forced, DampedForced, Swing };

/// Table row for the regime. `gamma` is the swing-equation damping and
/// `alpha` the inter-node damping of the damped regimes.
CouplingConfig regime_config(Regime r, double gamma = 1.0, double alpha = 1.0);

struct NoDrive {};

/// f(t) = amplitude * sin(frequency * t) applied to one node (0-based).
struct SinusoidDrive {
  std::size_t node = 0;
  double amplitude = 1.0;
  double frequency = 1.0;
};

/// Constant per-node injection (linear swing equation).
struct ConstantPower {
  Vector p;
};

using DriveSpec = std::variant<NoDrive, SinusoidDrive, ConstantPower>;

struct State {
  Vector x;
  Vector v;

  static State zeros(std::size_t n);
  std::size_t n() const { return static_cast<std::size_t>(x.size()); }
};

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;

  std::size_t size() const { return times.size(); }
  std::size_t n() const { return states.empty() ? 0 : states.front().n(); }
};

/// Uniform grid t0, t0 + dt, ..., up to and including t_max (within dt/2).
std::vector<double> uniform_grid(double t_max, double dt, double t0 = 0.0);

/// Block matrix G for the given configuration.
Matrix build_G(const Graph& g, const CouplingConfig& cfg);

/// One pair of G eigenvalues attached to a Laplacian mode.
struct GEigenpair {
  std::size_t mode = 0;
  double mu = 0.0;
  Complex lambda_plus;
  Complex lambda_minus;

  /// (phi, lambda phi) / sqrt(1 + |lambda|^2) for the chosen branch.
  Eigen::VectorXcd eigenvector(const Vector& phi, bool plus) const;
};

/// Roots of lambda^2 + gamma lambda + omega^2 = 0 for each mode, with
/// omega^2 = c1 + c2 mu and gamma = c1p + c2p mu. lambda_plus has the
/// larger real part.
std::vector<GEigenpair> eig_G(const SpectralDecomposition& lap, const CouplingConfig& cfg);

/// Damped-synchronization G (c1 = 1, c2p = alpha).
std::vector<GEigenpair> eig_G(const Graph& g, double alpha = 1.0);

/// Forcing seen by a single mode.
struct ScalarDrive {
  enum class Kind { Zero, Sinusoid, Constant };
  Kind kind = Kind::Zero;
  double amplitude = 0.0;
  double frequency = 0.0;
};

struct ModeState {
  double x = 0.0;
  double v = 0.0;
};

/// Stiffness and damping seen by a Laplacian mode.
struct ModeCoefficients {
  double omega_sq = 0.0;
  double gamma = 0.0;
};

ModeCoefficients mode_coefficients(double mu, const CouplingConfig& cfg);

/// Exact solution of x'' = -gamma x' - omega^2 x + drive(t) with x(0) = x0,
/// x'(0) = v0. Throws InvalidMode when omega^2 < 0.
ModeState mode_solve(double mu, const CouplingConfig& cfg, double x0, double v0,
                     const ScalarDrive& drive, double t);

/// Same, with coefficients supplied directly.
ModeState mode_solve(const ModeCoefficients& coeffs, double x0, double v0,
                     const ScalarDrive& drive, double t);

struct EvolveOptions {
  /// Allow a non-zero initial state together with a sinusoidal drive (the
  /// free response is superposed on the forced one).
  bool superpose_homogeneous = false;
};

/// Closed-form trajectory assembled from per-mode scalar solutions.
/// Throws MomentumInconsistency for a free network (c1 = c1p = c2p = 0)
/// whose initial velocities do not sum to zero.
Trajectory evolve(const Graph& g, const CouplingConfig& cfg, const DriveSpec& drive,
                  const State& y0, const std::vector<double>& times,
                  const EvolveOptions& opts = {});

Trajectory evolve(const Graph& g, const SpectralDecomposition& lap, const CouplingConfig& cfg,
                  const DriveSpec& drive, const State& y0, const std::vector<double>& times,
                  const EvolveOptions& opts = {});

/// e^{Gt} assembled from the 2x2 propagator of each mode.
Matrix expm_via_modes(const Graph& g, const CouplingConfig& cfg, double t);

Matrix expm_via_modes(const SpectralDecomposition& lap, const CouplingConfig& cfg, double t);

/// Laplacian eigenvalue with round-off around zero removed.
double snapped_eigenvalue(const SpectralDecomposition& lap, std::size_t i);

/// Symplectic identity [[0, I], [-I, 0]] of size 2n.
Matrix symplectic_identity(std::size_t n);

}  // namespace netosc
