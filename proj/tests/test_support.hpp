#pragma once

// Independent oracles for the test suite. These deliberately take different
// algorithmic routes than the library (dense nonsymmetric eigensolver,
// SVD reconstructed from the Gram eigendecomposition) so that agreement is
// meaningful.

#include <Eigen/Eigenvalues>

#include "lsvar/rng.hpp"
#include "lsvar/types.hpp"

namespace lsvar::testing {

inline Matrix random_matrix(int rows, int cols, uint64_t seed, double sd = 1.0) {
  auto rng = make_rng(seed);
  return gaussian_matrix(rows, cols, rng, sd);
}

/// Spectral radius through the full dense eigendecomposition.
inline double eig_spectral_radius(const Matrix& B) {
  Eigen::EigenSolver<Matrix> eig(B, false);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

struct BruteSvd {
  Matrix U;
  Vector s;
  Matrix V;
};

/// SVD assembled from the symmetric eigendecomposition of M'M: V from the
/// eigenvectors, sigma from the eigenvalue roots, U = M V / sigma.
inline BruteSvd svd_from_eigendecomposition(const Matrix& M) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(M.transpose() * M);
  const Index n = M.cols();
  BruteSvd out;
  out.s.resize(n);
  out.V.resize(n, n);
  // SelfAdjointEigenSolver sorts ascending; flip to nonincreasing.
  for (Index j = 0; j < n; ++j) {
    out.s(j) = std::sqrt(std::max(0.0, eig.eigenvalues()(n - 1 - j)));
    out.V.col(j) = eig.eigenvectors().col(n - 1 - j);
  }
  out.U.resize(M.rows(), n);
  for (Index j = 0; j < n; ++j) {
    if (out.s(j) > 1e-12 * out.s(0)) {
      out.U.col(j) = M * out.V.col(j) / out.s(j);
    } else {
      out.U.col(j).setZero();
    }
  }
  return out;
}

/// Singular value thresholding built on the brute-force SVD.
inline Matrix svt_bruteforce(const Matrix& M, double tau) {
  const BruteSvd dec = svd_from_eigendecomposition(M);
  Matrix out = Matrix::Zero(M.rows(), M.cols());
  for (Index j = 0; j < dec.s.size(); ++j) {
    const double shrunk = dec.s(j) - tau;
    if (shrunk > 0) out += shrunk * dec.U.col(j) * dec.V.col(j).transpose();
  }
  return out;
}

/// First-order optimality residual of argmin 0.5||B-M||_F^2 + t ||B||_1 at
/// the candidate B: zero entries need |M| <= t, active entries need
/// B - M + t sign(B) = 0.
inline double l1_prox_residual(const Matrix& M, const Matrix& B, double t) {
  double worst = 0;
  for (Index j = 0; j < M.cols(); ++j) {
    for (Index i = 0; i < M.rows(); ++i) {
      if (B(i, j) == 0.0) {
        worst = std::max(worst, std::abs(M(i, j)) - t);
      } else {
        const double sign = B(i, j) > 0 ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(B(i, j) - M(i, j) + t * sign));
      }
    }
  }
  return worst;
}

/// Same residual for the group prox: zero groups need ||u|| <= t, active
/// groups need v - u + t v/||v|| = 0.
inline double group_prox_residual(const Matrix& M, const Matrix& B, const GroupPartition& part,
                                  double t) {
  const Eigen::Map<const Vector> m_flat(M.data(), M.size());
  const Eigen::Map<const Vector> b_flat(B.data(), B.size());
  double worst = 0;
  for (const auto& grp : part.groups) {
    Vector u(grp.size()), v(grp.size());
    for (size_t k = 0; k < grp.size(); ++k) {
      u(k) = m_flat(grp[k]);
      v(k) = b_flat(grp[k]);
    }
    if (v.norm() == 0.0) {
      worst = std::max(worst, u.norm() - t);
    } else {
      worst = std::max(worst, (v - u + t * v / v.norm()).norm());
    }
  }
  return worst;
}

/// Nuclear-prox optimality: G = (M - B)/tau must lie in the subdifferential
/// of ||.||_* at B, i.e. U1' G V1 = I on the active subspace, zero cross
/// terms, and spectral norm at most 1 off it.
inline double svt_residual(const Matrix& M, const Matrix& B, double tau) {
  const BruteSvd dec = svd_from_eigendecomposition(B);
  // The Gram route reports zero singular values only to about
  // sqrt(eps) * ||B||, so the rank cut must sit above that noise floor.
  int r = 0;
  while (r < dec.s.size() && dec.s(r) > 1e-6 * std::max(dec.s(0), 1.0)) ++r;
  const Matrix G = (M - B) / tau;
  double worst = 0;
  if (r > 0) {
    const Matrix U1 = dec.U.leftCols(r), V1 = dec.V.leftCols(r);
    worst = std::max(worst, (U1.transpose() * G * V1 - Matrix::Identity(r, r)).norm());
    const Matrix P_U = Matrix::Identity(M.rows(), M.rows()) - U1 * U1.transpose();
    const Matrix P_V = Matrix::Identity(M.cols(), M.cols()) - V1 * V1.transpose();
    worst = std::max(worst, (U1.transpose() * G * P_V).norm());
    worst = std::max(worst, (P_U * G * V1).norm());
    const Matrix W = P_U * G * P_V;
    worst = std::max(worst, svd_from_eigendecomposition(W).s(0) - 1.0);
  } else {
    worst = std::max(worst, svd_from_eigendecomposition(G).s(0) - 1.0);
  }
  return worst;
}

}  // namespace lsvar::testing
