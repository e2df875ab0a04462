#include "netosc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netosc/errors.hpp"

namespace netosc {

namespace {

constexpr double kCriticalTol = 1e-10;
constexpr double kResonanceTol = 1e-9;

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

// Homogeneous building blocks: with s = gamma/2, every free solution reads
//   x(t) = x0 C(t) + (v0 + s x0) S(t)
// where C, S are the even/odd fundamental pair of the damped oscillator.
struct Fundamental {
  double s = 0.0;
  double C = 1.0;
  double S = 0.0;
};

Fundamental fundamental(double omega_sq, double gamma, double t) {
  Fundamental f;
  const double s = 0.5 * gamma;
  f.s = s;
  const double disc = gamma * gamma - 4.0 * omega_sq;
  if (std::abs(disc) < kCriticalTol) {
    const double e = std::exp(-s * t);
    f.C = e;
    f.S = t * e;
  } else if (disc < 0.0) {
    const double beta = 0.5 * std::sqrt(-disc);
    const double e = std::exp(-s * t);
    f.C = e * std::cos(beta * t);
    f.S = e * std::sin(beta * t) / beta;
  } else {
    // Real roots r1 = -omega^2/(s+beta) (slow) and r2 = -(s+beta) (fast).
    const double beta = 0.5 * std::sqrt(disc);
    const double r1 = -omega_sq / (s + beta);
    const double r2 = -(s + beta);
    const double slow = std::exp(r1 * t);
    const double fast = std::exp(r2 * t);
    f.C = 0.5 * (slow + fast);
    if (2.0 * beta * t < 1.0) {
      f.S = fast * std::expm1(2.0 * beta * t) / (2.0 * beta);
    } else {
      f.S = (slow - fast) / (2.0 * beta);
    }
  }
  return f;
}

ModeState homogeneous(const ModeCoefficients& c, double x0, double v0, double t) {
  const Fundamental f = fundamental(c.omega_sq, c.gamma, t);
  ModeState r;
  r.x = x0 * f.C + (v0 + f.s * x0) * f.S;
  r.v = v0 * (f.C - f.s * f.S) - c.omega_sq * x0 * f.S;
  return r;
}

// sin(z)/z, accurate near 0.
double sinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

// Solution of x'' + omega^2 x = a sin(w t) with x(0) = x'(0) = 0. The
// difference-frequency form stays finite as w -> omega.
ModeState undamped_sinusoid_rest(double omega, double a, double w, double t) {
  ModeState r;
  if (std::abs(w - omega) < kResonanceTol) {
    r.x = a * (std::sin(omega * t) - omega * t * std::cos(omega * t)) / (2.0 * omega * omega);
    r.v = a * t * std::sin(omega * t) / 2.0;
    return r;
  }
  const double delta = w - omega;
  const double sigma = 0.5 * (w + omega);
  const double beat = t * sinc(0.5 * delta * t);
  r.x = -a * (std::cos(sigma * t) * beat - std::sin(omega * t) / omega) / (omega + w);
  r.v = a * w * std::sin(sigma * t) * beat / (omega + w);
  return r;
}

Matrix modal_block(const Matrix& phi, const Vector& diag) {
  return phi * diag.asDiagonal() * phi.transpose();
}

}  // namespace

void CouplingConfig::validate() const {
  if (!finite_nonneg(c1) || !finite_nonneg(c2) || !finite_nonneg(c1p) || !finite_nonneg(c2p)) {
    throw Error(ErrorCode::InvalidArgument, "coupling coefficients must be finite and non-negative");
  }
  if (c1 == 0.0 && c2 == 0.0 && c1p == 0.0 && c2p == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "at least one coupling coefficient must be positive");
  }
}

CouplingConfig regime_config(Regime r, double gamma, double alpha) {
  switch (r) {
    case Regime::Coupled:
    case Regime::Forced:
      return {1.0, 1.0, 0.0, 0.0};
    case Regime::Damped:
    case Regime::DampedForced:
      return {1.0, 0.0, 0.0, alpha};
    case Regime::Swing:
      return {0.0, 1.0, gamma, 0.0};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown regime");
}

State State::zeros(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return {Vector::Zero(m), Vector::Zero(m)};
}

std::vector<double> uniform_grid(double t_max, double dt, double t0) {
  if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_max) || t_max < t0) {
    throw Error(ErrorCode::InvalidArgument, "grid needs dt > 0 and t_max >= t0");
  }
  const auto steps = static_cast<std::size_t>(std::llround((t_max - t0) / dt));
  std::vector<double> times(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) times[k] = t0 + static_cast<double>(k) * dt;
  return times;
}

Matrix build_G(const Graph& g, const CouplingConfig& cfg) {
  cfg.validate();
  const auto n = static_cast<Eigen::Index>(g.n());
  const Matrix L = laplacian(g);
  const Matrix I = Matrix::Identity(n, n);
  Matrix G = Matrix::Zero(2 * n, 2 * n);
  G.block(0, n, n, n) = I;
  G.block(n, 0, n, n) = -(cfg.c1 * I + cfg.c2 * L);
  G.block(n, n, n, n) = -(cfg.c1p * I + cfg.c2p * L);
  return G;
}

Matrix symplectic_identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  Matrix J = Matrix::Zero(2 * m, 2 * m);
  J.block(0, m, m, m) = Matrix::Identity(m, m);
  J.block(m, 0, m, m) = -Matrix::Identity(m, m);
  return J;
}

double snapped_eigenvalue(const SpectralDecomposition& lap, std::size_t i) {
  const double mu = lap.value(i);
  return std::abs(mu) < kZeroEigenvalueTol ? 0.0 : mu;
}

ModeCoefficients mode_coefficients(double mu, const CouplingConfig& cfg) {
  if (std::abs(mu) < kZeroEigenvalueTol) mu = 0.0;
  ModeCoefficients c;
  c.omega_sq = cfg.c1 + cfg.c2 * mu;
  c.gamma = cfg.c1p + cfg.c2p * mu;
  if (!std::isfinite(c.omega_sq) || c.omega_sq < 0.0) {
    std::ostringstream msg;
    msg << "mode with mu = " << mu << " has negative stiffness " << c.omega_sq;
    throw Error(ErrorCode::InvalidMode, msg.str());
  }
  if (!std::isfinite(c.gamma) || c.gamma < 0.0) {
    std::ostringstream msg;
    msg << "mode with mu = " << mu << " has negative damping " << c.gamma;
    throw Error(ErrorCode::InvalidMode, msg.str());
  }
  return c;
}

Eigen::VectorXcd GEigenpair::eigenvector(const Vector& phi, bool plus) const {
  const Complex lam = plus ? lambda_plus : lambda_minus;
  const auto n = phi.size();
  Eigen::VectorXcd psi(2 * n);
  psi.head(n) = phi.cast<Complex>();
  psi.tail(n) = lam * phi.cast<Complex>();
  return psi / std::sqrt(1.0 + std::norm(lam));
}

std::vector<GEigenpair> eig_G(const SpectralDecomposition& lap, const CouplingConfig& cfg) {
  cfg.validate();
  std::vector<GEigenpair> out;
  out.reserve(lap.size());
  for (std::size_t i = 0; i < lap.size(); ++i) {
    const double mu = snapped_eigenvalue(lap, i);
    const ModeCoefficients c = mode_coefficients(mu, cfg);
    double disc = c.gamma * c.gamma - 4.0 * c.omega_sq;
    if (std::abs(disc) < kCriticalTol) disc = 0.0;
    GEigenpair p;
    p.mode = i;
    p.mu = mu;
    if (disc >= 0.0) {
      const double lo = -0.5 * (c.gamma + std::sqrt(disc));
      const double hi = lo != 0.0 ? c.omega_sq / lo : 0.5 * (-c.gamma + std::sqrt(disc));
      p.lambda_plus = hi;
      p.lambda_minus = lo;
    } else {
      const double im = 0.5 * std::sqrt(-disc);
      p.lambda_plus = Complex(-0.5 * c.gamma, im);
      p.lambda_minus = Complex(-0.5 * c.gamma, -im);
    }
    out.push_back(p);
  }
  return out;
}

std::vector<GEigenpair> eig_G(const Graph& g, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  }
  return eig_G(laplacian_spectrum(g), CouplingConfig{1.0, 0.0, 0.0, alpha});
}

ModeState mode_solve(const ModeCoefficients& c, double x0, double v0, const ScalarDrive& drive,
                     double t) {
  if (c.omega_sq < 0.0 || c.gamma < 0.0) {
    throw Error(ErrorCode::InvalidMode, "negative modal stiffness or damping");
  }
  switch (drive.kind) {
    case ScalarDrive::Kind::Zero:
      return homogeneous(c, x0, v0, t);

    case ScalarDrive::Kind::Constant: {
      const double a = drive.amplitude;
      ModeState p0, pt;
      if (c.omega_sq > 0.0) {
        p0.x = pt.x = a / c.omega_sq;
      } else if (c.gamma > 0.0) {
        pt.x = a * t / c.gamma;
        p0.v = pt.v = a / c.gamma;
      } else {
        pt.x = 0.5 * a * t * t;
        pt.v = a * t;
      }
      ModeState h = homogeneous(c, x0 - p0.x, v0 - p0.v, t);
      return {h.x + pt.x, h.v + pt.v};
    }

    case ScalarDrive::Kind::Sinusoid: {
      const double a = drive.amplitude;
      const double w = drive.frequency;
      if (!(w > 0.0)) throw Error(ErrorCode::InvalidArgument, "drive frequency must be positive");
      if (c.gamma == 0.0 && c.omega_sq > 0.0) {
        const ModeState f = undamped_sinusoid_rest(std::sqrt(c.omega_sq), a, w, t);
        const ModeState h = homogeneous(c, x0, v0, t);
        return {h.x + f.x, h.v + f.v};
      }
      // Steady-state response P sin wt + Q cos wt, then match initial data.
      const double d = c.omega_sq - w * w;
      const double D = d * d + c.gamma * c.gamma * w * w;
      const double P = a * d / D;
      const double Q = -a * c.gamma * w / D;
      const double sw = std::sin(w * t);
      const double cw = std::cos(w * t);
      const ModeState h = homogeneous(c, x0 - Q, v0 - w * P, t);
      return {h.x + P * sw + Q * cw, h.v + w * (P * cw - Q * sw)};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown drive kind");
}

ModeState mode_solve(double mu, const CouplingConfig& cfg, double x0, double v0,
                     const ScalarDrive& drive, double t) {
  return mode_solve(mode_coefficients(mu, cfg), x0, v0, drive, t);
}

Trajectory evolve(const Graph& g, const CouplingConfig& cfg, const DriveSpec& drive,
                  const State& y0, const std::vector<double>& times, const EvolveOptions& opts) {
  return evolve(g, laplacian_spectrum(g), cfg, drive, y0, times, opts);
}

Trajectory evolve(const Graph& g, const SpectralDecomposition& lap, const CouplingConfig& cfg,
                  const DriveSpec& drive, const State& y0, const std::vector<double>& times,
                  const EvolveOptions& opts) {
  cfg.validate();
  const std::size_t n = g.n();
  if (y0.n() != n || static_cast<std::size_t>(y0.v.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "initial state length does not match the graph");
  }
  if (!y0.x.allFinite() || !y0.v.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "initial state must be finite");
  }
  if (times.empty()) throw Error(ErrorCode::InvalidArgument, "time grid is empty");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "time grid must be strictly increasing");
    }
  }

  const bool free_network = cfg.c1 == 0.0 && cfg.c1p == 0.0 && cfg.c2p == 0.0;
  if (free_network) {
    const double total = y0.v.sum();
    if (std::abs(total) > 1e-9 * std::max(1.0, y0.v.cwiseAbs().sum())) {
      std::ostringstream msg;
      msg << "free network needs sum(v0) = 0, got " << total;
      throw Error(ErrorCode::MomentumInconsistency, msg.str());
    }
  }

  const Matrix& phi = lap.vectors;
  const Vector a0 = phi.transpose() * y0.x;
  const Vector b0 = phi.transpose() * y0.v;

  std::vector<ScalarDrive> modal(n);
  if (const auto* s = std::get_if<SinusoidDrive>(&drive)) {
    if (s->node >= n) throw Error(ErrorCode::InvalidArgument, "drive node out of range");
    if (!(s->frequency > 0.0) || !std::isfinite(s->amplitude)) {
      throw Error(ErrorCode::InvalidArgument, "sinusoid needs finite amplitude and positive frequency");
    }
    if (!opts.superpose_homogeneous && ((y0.x.array() != 0.0).any() || (y0.v.array() != 0.0).any())) {
      throw Error(ErrorCode::InvalidArgument,
                  "sinusoidal forcing starts from rest unless superposition is requested");
    }
    for (std::size_t i = 0; i < n; ++i) {
      modal[i] = {ScalarDrive::Kind::Sinusoid,
                  s->amplitude * phi(static_cast<Eigen::Index>(s->node), static_cast<Eigen::Index>(i)),
                  s->frequency};
    }
  } else if (const auto* p = std::get_if<ConstantPower>(&drive)) {
    if (static_cast<std::size_t>(p->p.size()) != n || !p->p.allFinite()) {
      throw Error(ErrorCode::InvalidArgument, "power vector must be finite with one entry per node");
    }
    const Vector q = phi.transpose() * p->p;
    for (std::size_t i = 0; i < n; ++i) {
      modal[i] = {ScalarDrive::Kind::Constant, q(static_cast<Eigen::Index>(i)), 0.0};
    }
  }

  std::vector<ModeCoefficients> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = mode_coefficients(snapped_eigenvalue(lap, i), cfg);

  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());
  const auto m = static_cast<Eigen::Index>(n);
  Vector xm(m), vm(m);
  for (double t : times) {
    if (t == 0.0) {
      traj.states.push_back(y0);
      continue;
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      const ModeState r = mode_solve(coeffs[iu], a0(i), b0(i), modal[iu], t);
      xm(i) = r.x;
      vm(i) = r.v;
    }
    traj.states.push_back({phi * xm, phi * vm});
  }
  return traj;
}

Matrix expm_via_modes(const SpectralDecomposition& lap, const CouplingConfig& cfg, double t) {
  cfg.validate();
  const auto n = static_cast<Eigen::Index>(lap.size());
  Vector m11(n), m12(n), m21(n), m22(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const ModeCoefficients c = mode_coefficients(snapped_eigenvalue(lap, static_cast<std::size_t>(i)), cfg);
    const Fundamental f = fundamental(c.omega_sq, c.gamma, t);
    m11(i) = f.C + f.s * f.S;
    m12(i) = f.S;
    m21(i) = -c.omega_sq * f.S;
    m22(i) = f.C - f.s * f.S;
  }
  const Matrix& phi = lap.vectors;
  Matrix E(2 * n, 2 * n);
  E.block(0, 0, n, n) = modal_block(phi, m11);
  E.block(0, n, n, n) = modal_block(phi, m12);
  E.block(n, 0, n, n) = modal_block(phi, m21);
  E.block(n, n, n, n) = modal_block(phi, m22);
  return E;
}

Matrix expm_via_modes(const Graph& g, const CouplingConfig& cfg, double t) {
  return expm_via_modes(laplacian_spectrum(g), cfg, t);
}

}  // namespace netosc
