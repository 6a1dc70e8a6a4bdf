#pragma once

#include <functional>
#include <optional>

#include "lsvar/prox.hpp"
#include "lsvar/types.hpp"

namespace lsvar {

enum class PenaltyKind { l1, group_l1, nuclear };

struct Penalty {
  PenaltyKind kind = PenaltyKind::l1;
  double lambda = 0.0;
  std::optional<GroupPartition> partition;  // required for group_l1

  double value(const Matrix& B) const;
  Matrix prox(const Matrix& Z, double threshold) const;
};

/// Knobs of the accelerated solver. Defaults follow the reference settings:
/// sigma = 2, C = 100, eta_min = ||X'X||_2 / 10, beta_i = 1/i clamped into
/// the admissible band [0, (1 - 1/i)^2].
struct SolverConfig {
  double C = 100.0;
  double sigma = 2.0;
  double eta_min = 0.0;       // <= 0 selects ||X'X||_2 / 10
  double eta0_initial = 0.0;  // <= 0 selects eta_min
  std::function<double(int)> beta_schedule;  // default 1/i; always clamped
  int max_iter = 2000;
  double tol = 1e-8;          // relative objective change over a 5-iteration window
  Penalty penalty;

  void validate() const;
  double beta(int i) const;
};

struct IterRecord {
  int iter = 0;
  double objective = 0;     // on the prox iterate B_{i+1}; the stopping rule
                            // and the efficiency comparisons monitor this
  double objective_ag = 0;  // on the aggregate iterate (the 1/k^2 sequence)
  double eta = 0;
  double alpha = 0;
  double Q = 0;
  double Gamma = 0;
  int line_searches = 0;
  long ax_count = 0;        // cumulative multiplications by X or X'
};

struct SolveTrace {
  std::vector<IterRecord> iterations;
  Matrix B_last;  // final prox iterate (exact zeros from the prox maps)
  Matrix B_ag;    // final aggregate iterate (carries the 1/k^2 guarantee)
  long total_ax = 0;
  int total_line_searches = 0;
  bool converged = false;
};

struct FnslResult {
  Matrix B;  // the aggregate iterate
  SolveTrace trace;
};

/// Thrown when an objective evaluation stops being finite; carries the trace
/// accumulated up to the failing iteration.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& message, SolveTrace partial)
      : NumericError(message), trace(std::move(partial)) {}
  SolveTrace trace;
};

/// Safeguarded Barzilai-Borwein trial stepsize:
/// max(eta_min, ||X D||_F^2 / ||D||_F^2) for D = B_i - B_prev. Degenerate
/// differences fall back to eta_min.
double bb_stepsize(const Matrix& B_i, const Matrix& B_prev, const Matrix& X, double eta_min);

/// Positive root of eta0 * a^2 + d * a - d = 0 with d = alpha_prev * eta_prev,
/// i.e. the alpha_i solving 1/(alpha_{i-1} eta_{i-1}) = (1-alpha_i)/(alpha_i eta_i)
/// under eta_i = alpha_i * eta0_i. Always lands in (0, 1).
double solve_alpha(double alpha_prev, double eta_prev, double eta0_i);

/// ||X'X||_2 by power iteration, relative accuracy 1e-6.
double design_operator_norm(const Matrix& X);

/// Accelerated proximal gradient with safeguarded BB stepsizes and the
/// relaxed Q/Gamma line search, for a single penalty. Returns the aggregate
/// iterate; the trace carries both sequences and the AX instrumentation.
FnslResult fnsl_solve(const VarSample& sample, const SolverConfig& config);

/// 0.5 ||Y - X B||_F^2 + penalty(B).
double penalized_objective(const VarSample& sample, const Matrix& B, const Penalty& penalty);

}  // namespace lsvar
