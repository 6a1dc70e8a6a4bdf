#include "lsvar/prox.hpp"

#include <cmath>

namespace lsvar {

namespace {

void check_threshold(double t, const char* op) {
  if (!(t >= 0.0))
    throw ParameterError(std::string(op) + ": threshold must be nonnegative, got " +
                         std::to_string(t));
}

void check_partition(const Matrix& M, const GroupPartition& partition, const char* op) {
  if (partition.p != M.rows() || M.rows() != M.cols())
    throw ParameterError(std::string(op) + ": partition built for p=" +
                         std::to_string(partition.p) + " does not match a " +
                         std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + " matrix");
}

}  // namespace

Matrix soft_threshold(const Matrix& M, double t) {
  check_threshold(t, "soft_threshold");
  Matrix out(M.rows(), M.cols());
  for (Index j = 0; j < M.cols(); ++j) {
    for (Index i = 0; i < M.rows(); ++i) {
      const double v = M(i, j);
      const double mag = std::abs(v) - t;
      out(i, j) = mag > 0 ? (v > 0 ? mag : -mag) : 0.0;
    }
  }
  return out;
}

Matrix group_soft_threshold(const Matrix& M, const GroupPartition& partition, double t) {
  check_threshold(t, "group_soft_threshold");
  check_partition(M, partition, "group_soft_threshold");
  Matrix out = M;
  Eigen::Map<Vector> flat(out.data(), out.size());
  for (const auto& grp : partition.groups) {
    double sq = 0;
    for (Index idx : grp) sq += flat(idx) * flat(idx);
    const double norm = std::sqrt(sq);
    const double factor = norm > t ? 1.0 - t / norm : 0.0;
    for (Index idx : grp) flat(idx) *= factor;
  }
  return out;
}

SvdResult svd(const Matrix& M) {
  if (!M.allFinite()) throw NumericError("svd: input has non-finite entries");
  SvdResult r;
  // Jacobi is more accurate on tiny matrices; bidiagonal divide and conquer
  // wins above that.
  if (M.rows() <= 16 && M.cols() <= 16) {
    Eigen::JacobiSVD<Matrix> dec(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    r.U = dec.matrixU();
    r.singular_values = dec.singularValues();
    r.V = dec.matrixV();
  } else {
    Eigen::BDCSVD<Matrix> dec(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    r.U = dec.matrixU();
    r.singular_values = dec.singularValues();
    r.V = dec.matrixV();
  }
  return r;
}

SvtResult svt(const Matrix& M, double tau) {
  check_threshold(tau, "svt");
  SvdResult dec = svd(M);
  SvtResult out;
  Vector shrunk = dec.singular_values;
  for (Index i = 0; i < shrunk.size(); ++i) {
    shrunk(i) = std::max(0.0, shrunk(i) - tau);
    if (shrunk(i) > 0) ++out.rank;
  }
  if (out.rank == 0) {
    out.matrix = Matrix::Zero(M.rows(), M.cols());
  } else {
    out.matrix = dec.U.leftCols(out.rank) * shrunk.head(out.rank).asDiagonal() *
                 dec.V.leftCols(out.rank).transpose();
  }
  return out;
}

Matrix project_box(const Matrix& M, double bound) {
  if (!(bound >= 0.0)) throw ParameterError("project_box: bound must be nonnegative");
  return M.cwiseMax(-bound).cwiseMin(bound);
}

Matrix project_group_box(const Matrix& M, const GroupPartition& partition, double bound) {
  if (!(bound >= 0.0)) throw ParameterError("project_group_box: bound must be nonnegative");
  check_partition(M, partition, "project_group_box");
  Matrix out = M;
  Eigen::Map<Vector> flat(out.data(), out.size());
  for (const auto& grp : partition.groups) {
    double sq = 0;
    for (Index idx : grp) sq += flat(idx) * flat(idx);
    const double norm = std::sqrt(sq);
    if (norm > bound) {
      const double factor = bound > 0 ? bound / norm : 0.0;
      for (Index idx : grp) flat(idx) *= factor;
    }
  }
  return out;
}

double l1_norm(const Matrix& M) { return M.cwiseAbs().sum(); }

double group_l21_norm(const Matrix& M, const GroupPartition& partition) {
  check_partition(M, partition, "group_l21_norm");
  const Eigen::Map<const Vector> flat(M.data(), M.size());
  double total = 0;
  for (const auto& grp : partition.groups) {
    double sq = 0;
    for (Index idx : grp) sq += flat(idx) * flat(idx);
    total += std::sqrt(sq);
  }
  return total;
}

double group_l2_max(const Matrix& M, const GroupPartition& partition) {
  check_partition(M, partition, "group_l2_max");
  const Eigen::Map<const Vector> flat(M.data(), M.size());
  double best = 0;
  for (const auto& grp : partition.groups) {
    double sq = 0;
    for (Index idx : grp) sq += flat(idx) * flat(idx);
    best = std::max(best, std::sqrt(sq));
  }
  return best;
}

double nuclear_norm(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  if (M.rows() <= 16 && M.cols() <= 16) {
    Eigen::JacobiSVD<Matrix> dec(M);
    return dec.singularValues().sum();
  }
  Eigen::BDCSVD<Matrix> dec(M);
  return dec.singularValues().sum();
}

}  // namespace lsvar
