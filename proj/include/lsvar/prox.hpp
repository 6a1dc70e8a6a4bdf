#pragma once

#include "lsvar/types.hpp"

namespace lsvar {

/// Entrywise shrinkage: prox of t*||.||_1. Produces exact zeros.
Matrix soft_threshold(const Matrix& M, double t);

/// Blockwise shrinkage: prox of t*||.||_{2,1}. Each group is scaled by
/// (1 - t/||group||_2)_+; groups at or below the threshold become exactly
/// zero.
Matrix group_soft_threshold(const Matrix& M, const GroupPartition& partition, double t);

struct SvdResult {
  Matrix U;
  Vector singular_values;  // nonincreasing, nonnegative
  Matrix V;

  Matrix reconstruct() const { return U * singular_values.asDiagonal() * V.transpose(); }
};

/// Thin SVD, M = U diag(s) V'. Throws NumericError on non-finite input.
SvdResult svd(const Matrix& M);

struct SvtResult {
  Matrix matrix;
  int rank = 0;  // singular values surviving the shrinkage
};

/// Singular value thresholding: prox of tau*||.||_*.
SvtResult svt(const Matrix& M, double tau);

/// Entrywise clipping to [-bound, bound]; Euclidean projection onto
/// {||L||_max <= bound}.
Matrix project_box(const Matrix& M, double bound);

/// Projection onto {||L||_{2,max} <= bound}: groups with norm above the bound
/// are rescaled to norm exactly bound.
Matrix project_group_box(const Matrix& M, const GroupPartition& partition, double bound);

/// l1 norm of the entries.
double l1_norm(const Matrix& M);

/// Sum of group l2 norms under the partition.
double group_l21_norm(const Matrix& M, const GroupPartition& partition);

/// Largest group l2 norm.
double group_l2_max(const Matrix& M, const GroupPartition& partition);

/// Sum of singular values.
double nuclear_norm(const Matrix& M);

}  // namespace lsvar
