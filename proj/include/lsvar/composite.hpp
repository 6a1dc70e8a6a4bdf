#pragma once

#include "lsvar/solver.hpp"
#include "lsvar/types.hpp"

namespace lsvar {

/// Configuration of the composite program
///   0.5 ||Y - X(L+S+G)||_F^2 + lambda_N ||L||_* + mu_N ||S||_1 + nu_N ||G||_{2,1}
/// with the feasibility boxes ||L||_max <= alpha/p, ||L||_{2,max} <= beta/sqrt(K)
/// and optionally ||G||_max <= gamma/p. A box numerator of zero disables the
/// corresponding projection.
struct CompositeConfig {
  bool with_low_rank = false;
  bool with_sparse = false;
  bool with_group = false;

  double lambda_N = 0.0;  // nuclear weight
  double mu_N = 0.0;      // l1 weight
  double nu_N = 0.0;      // l2,1 weight

  double alpha = 0.0;  // ||L||_max <= alpha / p
  double beta = 0.0;   // ||L||_{2,max} <= beta / sqrt(K)
  double gamma = 0.0;  // ||G||_max <= gamma / p

  GroupPartition partition;  // for G and the group box; defaulted to columns
  SolverConfig solver;       // C, sigma, eta_min, beta schedule, max_iter, tol

  static CompositeConfig for_model(const std::string& model, int p);
  void validate(int p) const;
};

struct CompositeFit {
  Matrix L, S, G;                 // aggregate iterates (estimation output)
  Matrix L_last, S_last, G_last;  // final prox iterates (exact support/rank)
  SolveTrace trace;

  Matrix total() const { return L + S + G; }
  Matrix total_last() const { return L_last + S_last + G_last; }
};

/// Objective of the composite program at (L, S, G); inactive components must
/// be passed as zero matrices.
double composite_objective(const Matrix& L, const Matrix& S, const Matrix& G,
                           const VarSample& sample, const CompositeConfig& config);

/// Block proximal version of the accelerated solver: one shared gradient and
/// stepsize, per-block shrinkage, SVT-then-project for the constrained
/// low-rank block. A warm start seeds the first iterate from another fit's
/// final prox iterates; by default all components start at zero.
CompositeFit afnsl_solve(const VarSample& sample, const CompositeConfig& config,
                         const CompositeFit* warm_start = nullptr);

/// Least squares via the normal equations. Throws SingularityError when X'X
/// is not positive definite.
Matrix ols_solve(const VarSample& sample);

}  // namespace lsvar
