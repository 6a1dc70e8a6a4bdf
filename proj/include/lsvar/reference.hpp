#pragma once

#include "lsvar/solver.hpp"

namespace lsvar {

struct ReferenceResult {
  Matrix B;
  double objective = 0;
  int iterations = 0;
  long ax_count = 0;
  bool converged = false;
  std::vector<double> objectives;  // per-iteration
};

/// Plain proximal gradient with the fixed safe step 1/||X'X||_2. Slow but
/// dependable; serves as the agreement oracle for the accelerated solver.
ReferenceResult ista_solve(const VarSample& sample, const Penalty& penalty, int max_iter = 20000,
                           double tol = 1e-10);

/// FISTA with backtracking line search, instrumented with the same AX
/// accounting as the accelerated solver. The comparison baseline of the
/// bench suite.
ReferenceResult fista_solve(const VarSample& sample, const Penalty& penalty, int max_iter = 2000,
                            double tol = 1e-8, double L0 = 0.0, double eta_up = 2.0);

}  // namespace lsvar
