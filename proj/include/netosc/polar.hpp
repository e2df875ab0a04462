#pragma once

#include <cstddef>
#include <vector>

#include "netosc/dynamics.hpp"

namespace netosc {

/// Reciprocal eigenvalue pair of P for one Laplacian mode.
struct PEigenpair {
  std::size_t mode = 0;
  double mu = 0.0;
  double plus = 1.0;   // (sqrt(mu^2 + 4) + mu) / 2
  double minus = 1.0;  // (sqrt(mu^2 + 4) - mu) / 2
  Vector psi_plus;     // (phi, +plus phi) / sqrt(1 + plus^2)
  Vector psi_minus;    // (phi, -minus phi) / sqrt(1 + minus^2)
};

/// Conjugate eigenvalue pair e^{+-i theta} of U for one Laplacian mode.
struct UEigenpair {
  std::size_t mode = 0;
  double mu = 0.0;
  double theta = 0.0;  // radians, 2 atan(lambda_P+)
  Complex plus;
  Complex minus;
  Eigen::VectorXcd psi_plus;  // (phi, +i phi) / sqrt(2)
  Eigen::VectorXcd psi_minus;
};

double degrees(double radians);

/// G = U P for the damped network G = [[0, I], [-I, -L]].
struct PolarFactors {
  Matrix G;
  Matrix U;  // G (G^T G)^{-1/2}, computed numerically
  Matrix P;  // (G^T G)^{1/2}
  std::vector<PEigenpair> p_pairs;
  std::vector<UEigenpair> u_pairs;
  Matrix A;  // sum cos(theta_i) phi_i phi_i^T
  Matrix B;  // sum sin(theta_i) phi_i phi_i^T

  /// [[A, B], [-B, A]].
  Matrix analytic_U() const;
};

PolarFactors polar_decompose(const Graph& g);

std::vector<PEigenpair> p_eigenpairs(const SpectralDecomposition& lap);
std::vector<PEigenpair> p_eigenpairs(const Graph& g);

std::vector<UEigenpair> u_eigenpairs(const SpectralDecomposition& lap);
std::vector<UEigenpair> u_eigenpairs(const Graph& g);

/// e^{Ut}, assembled from the unitary eigenstructure of U.
Matrix expm_U(const SpectralDecomposition& lap, double t);

}  // namespace netosc
