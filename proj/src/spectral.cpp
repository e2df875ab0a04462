#include "netosc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "netosc/errors.hpp"

namespace netosc {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-14;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Applies the rotation J(p, q, c, s) as A <- J^T A J and V <- V J.
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

void fix_sign(Eigen::Ref<Vector> col) {
  const double biggest = col.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    if (std::abs(col(i)) >= biggest - 1e-12) {
      if (col(i) < 0.0) col = -col;
      return;
    }
  }
}

}  // namespace

SpectralDecomposition eig_sym(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return {};
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym >= 1e-12) {
    throw Error(ErrorCode::NotSymmetric, "max |m - m^T| = " + std::to_string(asym));
  }

  Matrix a = 0.5 * (m + m.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double scale = std::max(a.norm(), 1.0);

  int sweep = 0;
  while (off_diagonal_norm(a) > kOffDiagonalTol * scale) {
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, v, p, q);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  SpectralDecomposition d;
  d.values.resize(n);
  d.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    d.values(k) = a(src, src);
    d.vectors.col(k) = v.col(src).normalized();
    fix_sign(d.vectors.col(k));
  }
  return d;
}

SpectralDecomposition laplacian_spectrum(const Graph& g) { return eig_sym(laplacian(g)); }

Matrix spectral_apply(const SpectralDecomposition& d, const std::function<double(double)>& f) {
  Vector fv(d.values.size());
  for (Eigen::Index i = 0; i < d.values.size(); ++i) {
    fv(i) = f(d.values(i));
    if (!std::isfinite(fv(i))) {
      throw Error(ErrorCode::DomainError,
                  "function undefined at eigenvalue " + std::to_string(d.values(i)));
    }
  }
  return d.vectors * fv.asDiagonal() * d.vectors.transpose();
}

Matrix pseudo_inverse(const SpectralDecomposition& d) {
  const Eigen::Index n = d.values.size();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(d.values(i)) < kZeroEigenvalueTol) continue;
    out.noalias() += (d.vectors.col(i) * d.vectors.col(i).transpose()) / d.values(i);
  }
  // exact symmetry
  return 0.5 * (out + out.transpose());
}

std::vector<EigenvalueGroup> distinct_eigenvalues(const SpectralDecomposition& d, double tol) {
  std::vector<EigenvalueGroup> groups;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!groups.empty() && std::abs(groups.back().value - d.value(i)) < tol) {
      auto& g = groups.back();
      g.value = (g.value * double(g.multiplicity) + d.value(i)) / double(g.multiplicity + 1);
      ++g.multiplicity;
    } else {
      groups.push_back({d.value(i), 1, i});
    }
  }
  return groups;
}

Matrix eigenspace_projector(const SpectralDecomposition& d, std::size_t mode, double tol) {
  const Eigen::Index n = d.values.size();
  Matrix proj = Matrix::Zero(n, n);
  const double target = d.value(mode);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(d.values(i) - target) < tol) {
      proj.noalias() += d.vectors.col(i) * d.vectors.col(i).transpose();
    }
  }
  return proj;
}

}  // namespace netosc
