#pragma once

#include <cstdint>
#include <string>

#include "lsvar/eval.hpp"
#include "lsvar/tuning.hpp"
#include "lsvar/types.hpp"

namespace lsvar {

struct BenchOptions {
  int p = 0;       // 0 selects the suite default
  int n = 0;
  int reps = 0;
  int jobs = 0;    // 0 selects hardware concurrency
  uint64_t seed = 42;
  bool full_scale = false;  // opt-in paper-scale dimensions
  std::string out_dir;      // empty disables file output
};

/// Per-method replication summary of one synthetic suite.
struct MethodSummary {
  std::string method;
  EvalReport report;
  std::vector<double> ee;  // per replication, for paired comparisons
};

struct LsBenchResult {
  MethodSummary ols, lasso, ls;
};

/// Low-rank plus sparse recovery against OLS and lasso baselines
/// (p=50, N=200 by default).
LsBenchResult bench_ls(const BenchOptions& opts);

struct AlphaSweepRow {
  double alpha = 0;
  double tpr_mean = 0;
  double far_mean = 0;
};

/// TPR/FAR of the sparse component across the box radii
/// alpha in {p/8, p/4, p/2, p, 2p, 4p, 8p}, on shared replication data.
std::vector<AlphaSweepRow> bench_alpha_sweep(const BenchOptions& opts);

struct SolverComparisonRow {
  int rep = 0;
  double objective_fnsl = 0, objective_fista = 0;
  int iterations_fnsl = 0, iterations_fista = 0;
  long ax_fnsl = 0, ax_fista = 0;
  double seconds_fnsl = 0, seconds_fista = 0;
  EvalMetrics metrics_fnsl, metrics_fista;
};

/// Sparse single-penalty estimation, accelerated solver versus the FISTA
/// baseline with the AX instrumentation (p=200, N=400 at desk scale;
/// p=1000, N=2000 with full_scale).
std::vector<SolverComparisonRow> bench_sparse_large(const BenchOptions& opts);

struct LowRankRow {
  int rep = 0;
  int r_hat = 0;
  double ee = 0;
  double lambda = 0;
};

/// Nuclear-penalty recovery of a rank floor(p/25)+1 transition
/// (p=200, N=2000 by default), oracle-selected over the lambda grid.
std::vector<LowRankRow> bench_lowrank(const BenchOptions& opts);

struct SgBenchResult {
  MethodSummary lasso, sg;
};

/// Sparse plus group-sparse suite with two hub columns (p=50, N=200).
SgBenchResult bench_sg(const BenchOptions& opts);

struct LsgBenchResult {
  MethodSummary sg, ls, lsg;
};

/// Three-component suite comparing S+G, L+S, and L+S+G fits (p=50, N=300).
LsgBenchResult bench_lsg(const BenchOptions& opts);

/// Prop-3 style deviation ratios (p=20, rho=0.5 by default).
std::vector<DeviationRow> bench_deviation(const BenchOptions& opts);

/// Fig-3 style error scaling at fixed rank r=2 for p in {50, 100}.
std::vector<ScalingRow> bench_error_scaling(const BenchOptions& opts);

/// Dispatch by suite name; writes the suite tables under opts.out_dir when
/// set and returns a human-readable summary.
std::string run_bench_suite(const std::string& suite, const BenchOptions& opts);

}  // namespace lsvar
