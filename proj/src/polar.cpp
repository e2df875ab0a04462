#include "netosc/polar.hpp"

#include <cmath>
#include <numbers>

#include "netosc/errors.hpp"

namespace netosc {

namespace {

const CouplingConfig kDamped{1.0, 0.0, 0.0, 1.0};

double p_plus(double mu) { return 0.5 * (std::sqrt(mu * mu + 4.0) + mu); }

double p_minus(double mu) {
  // 1 / p_plus, written without cancellation for large mu.
  return 2.0 / (std::sqrt(mu * mu + 4.0) + mu);
}

}  // namespace

double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

std::vector<PEigenpair> p_eigenpairs(const SpectralDecomposition& lap) {
  std::vector<PEigenpair> out;
  out.reserve(lap.size());
  const auto n = static_cast<Eigen::Index>(lap.size());
  for (std::size_t i = 0; i < lap.size(); ++i) {
    PEigenpair p;
    p.mode = i;
    p.mu = snapped_eigenvalue(lap, i);
    p.plus = p_plus(p.mu);
    p.minus = p_minus(p.mu);
    const Vector phi = lap.vector(i);
    p.psi_plus.resize(2 * n);
    p.psi_plus << phi, p.plus * phi;
    p.psi_plus /= std::sqrt(1.0 + p.plus * p.plus);
    p.psi_minus.resize(2 * n);
    p.psi_minus << phi, -p.minus * phi;
    p.psi_minus /= std::sqrt(1.0 + p.minus * p.minus);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<PEigenpair> p_eigenpairs(const Graph& g) { return p_eigenpairs(laplacian_spectrum(g)); }

std::vector<UEigenpair> u_eigenpairs(const SpectralDecomposition& lap) {
  std::vector<UEigenpair> out;
  out.reserve(lap.size());
  const auto n = static_cast<Eigen::Index>(lap.size());
  const Complex i_unit(0.0, 1.0);
  for (std::size_t i = 0; i < lap.size(); ++i) {
    UEigenpair u;
    u.mode = i;
    u.mu = snapped_eigenvalue(lap, i);
    u.theta = 2.0 * std::atan(p_plus(u.mu));
    u.plus = std::polar(1.0, u.theta);
    u.minus = std::polar(1.0, -u.theta);
    const Eigen::VectorXcd phi = lap.vector(i).cast<Complex>();
    u.psi_plus.resize(2 * n);
    u.psi_plus << phi, i_unit * phi;
    u.psi_plus /= std::sqrt(2.0);
    u.psi_minus.resize(2 * n);
    u.psi_minus << phi, -i_unit * phi;
    u.psi_minus /= std::sqrt(2.0);
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<UEigenpair> u_eigenpairs(const Graph& g) { return u_eigenpairs(laplacian_spectrum(g)); }

Matrix PolarFactors::analytic_U() const {
  const auto n = A.rows();
  Matrix U(2 * n, 2 * n);
  U << A, B, -B, A;
  return U;
}

PolarFactors polar_decompose(const Graph& g) {
  PolarFactors f;
  f.G = build_G(g, kDamped);
  const Matrix GtG = f.G.transpose() * f.G;
  const SpectralDecomposition d = eig_sym(0.5 * (GtG + GtG.transpose()));
  if (d.values.minCoeff() <= 0.0) {
    throw Error(ErrorCode::SolveFailure, "G^T G is not positive definite");
  }
  f.P = spectral_apply(d, [](double x) { return std::sqrt(x); });
  f.P = 0.5 * (f.P + f.P.transpose());
  f.U = f.G * spectral_apply(d, [](double x) { return 1.0 / std::sqrt(x); });

  const SpectralDecomposition lap = laplacian_spectrum(g);
  f.p_pairs = p_eigenpairs(lap);
  f.u_pairs = u_eigenpairs(lap);
  const auto n = static_cast<Eigen::Index>(lap.size());
  Vector c(n), s(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double theta = f.u_pairs[static_cast<std::size_t>(i)].theta;
    c(i) = std::cos(theta);
    s(i) = std::sin(theta);
  }
  f.A = lap.vectors * c.asDiagonal() * lap.vectors.transpose();
  f.B = lap.vectors * s.asDiagonal() * lap.vectors.transpose();
  return f;
}

Matrix expm_U(const SpectralDecomposition& lap, double t) {
  // Each mode block of U is cos(theta) I + sin(theta) J, whose exponential is
  // e^{t cos theta} times a rotation by t sin theta.
  const auto n = static_cast<Eigen::Index>(lap.size());
  Vector a(n), b(n);
  for (const UEigenpair& u : u_eigenpairs(lap)) {
    const auto i = static_cast<Eigen::Index>(u.mode);
    const double decay = std::exp(t * std::cos(u.theta));
    a(i) = decay * std::cos(t * std::sin(u.theta));
    b(i) = decay * std::sin(t * std::sin(u.theta));
  }
  const Matrix& phi = lap.vectors;
  const Matrix Ab = phi * a.asDiagonal() * phi.transpose();
  const Matrix Bb = phi * b.asDiagonal() * phi.transpose();
  Matrix E(2 * n, 2 * n);
  E << Ab, Bb, -Bb, Ab;
  return E;
}

}  // namespace netosc
