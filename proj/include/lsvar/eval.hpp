#pragma once

#include <cstdint>

#include "lsvar/types.hpp"

namespace lsvar {

struct EvalMetrics {
  double tpr = 0;  // percent
  double far = 0;  // percent
  double ee = 0;   // ||estimate - truth||_F / ||truth||_F
};

/// Support comparison at an absolute zero-detection threshold plus the
/// relative Frobenius error. Throws ParameterError when the truth is
/// identically zero (TPR undefined).
EvalMetrics metrics(const Matrix& truth, const Matrix& estimate, double zero_tol = 1e-10);

/// One-step-ahead relative squared prediction error on a holdout design.
double prediction_error(const Matrix& B_hat, const VarSample& holdout);

/// Replication aggregates of the standard metric set.
struct EvalReport {
  Aggregate tpr, far, ee, pe, r_hat;
  int replications = 0;
};

/// Monte Carlo check of the deviation-bound rates: each noise-interaction
/// norm divided by its theoretical rate, and the smallest Gram eigenvalue
/// against its curvature floor.
struct DeviationRow {
  int N = 0;
  double ratio_max = 0;     // ||X'E/N||_max      / sqrt(log p / N)
  double ratio_spec = 0;    // ||X'E/N||_2        / sqrt(p / N)
  double ratio_group = 0;   // ||X'E/N||_{2,max}  / sqrt(m log p / N)
  double ratio_gram = 0;    // Lambda_min(X'X/N)  / (Lambda_min(Sigma) / (2 mu_max))
};

std::vector<DeviationRow> deviation_mc(const StructuredTransition& B, double sigma_eps,
                                       const std::vector<int>& N_grid, int reps,
                                       const GroupPartition& partition, uint64_t seed,
                                       int jobs = 0);

/// Error-scaling sweep with the rank fixed across dimensions: median of
/// ||S_hat - S||_F^2 + ||L_hat - L||_F^2 against both the raw and the
/// rescaled sample size N / (s log p + r p).
struct ScalingRow {
  int p = 0;
  int N = 0;
  double rescaled_N = 0;
  double median_error = 0;
};

std::vector<ScalingRow> error_scaling_experiment(const std::vector<int>& p_list, int r_fixed,
                                                 const std::vector<int>& N_grid, int reps,
                                                 uint64_t seed, int jobs = 0);

}  // namespace lsvar
