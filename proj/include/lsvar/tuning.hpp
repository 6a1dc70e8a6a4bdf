#pragma once

#include "lsvar/composite.hpp"
#include "lsvar/types.hpp"

namespace lsvar {

enum class Criterion { AIC, BIC, forward_cv, oracle };

Criterion criterion_from_string(const std::string& name);

struct TuningGrid {
  std::vector<double> lambda_values{0.0};
  std::vector<double> mu_values{0.0};
  std::vector<double> nu_values{0.0};
  Criterion criterion = Criterion::AIC;

  void validate() const;
};

/// Ascending grid of `count` equally spaced values in [0, top]; the standard
/// axis is top = ||X'Y||_max with 100 points.
std::vector<double> linear_grid(double top, int count);

/// Ascending log-spaced grid in [top/ratio, top].
std::vector<double> log_grid(double top, double ratio, int count);

struct GridFit {
  double lambda = 0, mu = 0, nu = 0;
  CompositeFit fit;
};

/// Sweeps the active axes of the grid (descending regularization order with
/// warm starts, then a cold refit at the selected point happens in the
/// selector helpers below). Axes of inactive components must be {0}.
std::vector<GridFit> sweep_grid(const VarSample& sample, const CompositeConfig& prototype,
                                const TuningGrid& grid, int jobs = 0);

/// Effective parameter count: ||S||_0 + g * (mean group size) + r (2p - r),
/// computed on the exact-support iterates of the fit.
double degrees_of_freedom(const CompositeFit& fit, const CompositeConfig& config);

/// AIC = N log(RSS/N) + 2 df, BIC = N log(RSS/N) + log(N) df, on the
/// aggregate estimate. Throws NumericError when RSS is zero (degenerate fit).
double information_criterion(const VarSample& sample, const CompositeFit& fit,
                             const CompositeConfig& config, Criterion kind);

/// Smallest-index argmin of the criterion over the grid fits.
size_t select_by_information_criterion(const VarSample& sample, const std::vector<GridFit>& fits,
                                       const CompositeConfig& config, Criterion kind);

struct ForwardCvRow {
  double lambda = 0, mu = 0, nu = 0;
  double mean_err = 0;
  int folds = 0;
};

struct ForwardCvResult {
  double lambda = 0, mu = 0, nu = 0;
  std::vector<ForwardCvRow> table;
};

/// Rolling-window temporal validation: estimate on the W most recent
/// observations ending at t = W + stride*i, score on the next W_prime
/// observations, average over all full validation windows. Ties break to the
/// first grid point.
ForwardCvResult forward_cv(const Matrix& series, const CompositeConfig& prototype,
                           const TuningGrid& grid, int W, int W_prime, int stride, int jobs = 0);

struct OracleSelection {
  size_t index = 0;
  bool structure_matched = false;  // rank and/or group count matched the truth
  double ee = 0;
};

/// Among fits whose estimated rank (and nonzero-group count, when the truth
/// has a group component) matches the truth, returns the one with the
/// smallest EE; falls back to the global EE minimizer when none match.
OracleSelection oracle_select(const StructuredTransition& truth, const std::vector<GridFit>& fits);

}  // namespace lsvar
