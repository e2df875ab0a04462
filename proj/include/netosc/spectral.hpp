#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "netosc/graph.hpp"

namespace netosc {

/// Eigenvalues below this magnitude are treated as the Laplacian null mode.
inline constexpr double kZeroEigenvalueTol = 1e-9;

/// Tolerance used when grouping eigenvalues into multiplicities for reports.
inline constexpr double kDistinctEigenvalueTol = 1e-6;

/// Eigen-decomposition of a real symmetric matrix.
///
/// Eigenvalues are sorted in decreasing order; column i of `vectors` pairs
/// with `values[i]`. Each column is scaled so that its entry of largest
/// magnitude is positive (ties go to the lowest index), which makes
/// individual components reproducible for simple eigenvalues. Inside a
/// degenerate block the basis is arbitrary but orthonormal.
struct SpectralDecomposition {
  Vector values;
  Matrix vectors;

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }
  double value(std::size_t i) const { return values(static_cast<Eigen::Index>(i)); }
  auto vector(std::size_t i) const { return vectors.col(static_cast<Eigen::Index>(i)); }
};

struct EigenvalueGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;
  std::size_t first = 0;  // index of the first mode of the group
};

/// Cyclic Jacobi. Throws NotSymmetric if max|m - m^T| >= 1e-12 and
/// NoConvergence after 100 sweeps.
SpectralDecomposition eig_sym(const Matrix& m);

/// Decomposition of the graph Laplacian.
SpectralDecomposition laplacian_spectrum(const Graph& g);

/// Phi * diag(f(lambda_i)) * Phi^T. Throws DomainError if f yields a
/// non-finite value at some eigenvalue.
Matrix spectral_apply(const SpectralDecomposition& d, const std::function<double(double)>& f);

/// Moore-Penrose pseudo-inverse, discarding modes with |lambda| < kZeroEigenvalueTol.
Matrix pseudo_inverse(const SpectralDecomposition& d);

/// Groups consecutive (descending) eigenvalues closer than `tol`.
std::vector<EigenvalueGroup> distinct_eigenvalues(const SpectralDecomposition& d,
                                                  double tol = kDistinctEigenvalueTol);

/// Orthogonal projector onto the eigenspace containing mode `mode`
/// (all modes whose eigenvalue lies within `tol` of it).
Matrix eigenspace_projector(const SpectralDecomposition& d, std::size_t mode,
                            double tol = kDistinctEigenvalueTol);

}  // namespace netosc
