// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line. Tolerances and bands are pinned in code; replication
// counts are chosen for a small workstation.

#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "lsvar/bench.hpp"
#include "lsvar/composite.hpp"
#include "lsvar/eval.hpp"
#include "lsvar/model.hpp"
#include "lsvar/prox.hpp"
#include "lsvar/reference.hpp"
#include "lsvar/solver.hpp"
#include "lsvar/stability.hpp"
#include "lsvar/tuning.hpp"
#include "test_support.hpp"

using namespace lsvar;
using namespace lsvar::testing;

namespace {

struct CriterionCheck {
  std::string name;
  std::vector<std::string> failures;

  explicit CriterionCheck(std::string n) : name(std::move(n)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  ~CriterionCheck() {
    std::printf("[%s] %s\n", name.c_str(), failures.empty() ? "PASS" : "FAIL");
    for (const auto& f : failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

double loglog_slope(const std::vector<double>& gaps, int first, int last) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int k = first; k <= last && k <= static_cast<int>(gaps.size()); ++k) {
    const double g = gaps[k - 1];
    if (!(g > 0)) return std::numeric_limits<double>::quiet_NaN();
    const double x = std::log(static_cast<double>(k)), y = std::log(g);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_SUITE_BEGIN("acceptance");

TEST_CASE("criterion 1: prox first-order optimality and brute-force SVT") {
  CriterionCheck crit("criterion 1: prox oracles");
  double worst_l1 = 0, worst_group = 0, worst_svt = 0, worst_recon = 0;
  const GroupPartition part = GroupPartition::columns(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix M = random_matrix(3, 3, 9000 + trial);
    const double t = 0.2 + 0.01 * trial;

    worst_l1 = std::max(worst_l1, l1_prox_residual(M, soft_threshold(M, t), t));
    worst_group =
        std::max(worst_group, group_prox_residual(M, group_soft_threshold(M, part, t), part, t));

    const SvtResult out = svt(M, t);
    worst_svt = std::max(worst_svt, svt_residual(M, out.matrix, t));
    worst_recon = std::max(worst_recon, (out.matrix - svt_bruteforce(M, t)).norm());
  }
  crit.expect(worst_l1 < 1e-8, "l1 residual " + fmt(worst_l1));
  crit.expect(worst_group < 1e-8, "group residual " + fmt(worst_group));
  crit.expect(worst_svt < 1e-8, "svt residual " + fmt(worst_svt));
  crit.expect(worst_recon < 1e-8, "svt vs brute force " + fmt(worst_recon));
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 2: objective gap decays at the accelerated rate") {
  CriterionCheck crit("criterion 2: 1/k^2 convergence");

  // Sparse problem, p = 100, N = 200.
  {
    StructureSpec spec;
    spec.p = 100;
    spec.edge_prob = 0.1;
    spec.rho = 0.7;
    const StructuredTransition truth = generate_structured(spec, 71);
    const VarSample s = simulate_var(truth, 200, 1.0, 500, 72);
    const Penalty penalty{PenaltyKind::l1,
                          2.0 * (s.X.transpose() * s.E).cwiseAbs().maxCoeff(), std::nullopt};

    SolverConfig run;
    run.penalty = penalty;
    run.C = 0.0;
    run.tol = 0.0;
    run.max_iter = 200;
    const FnslResult probe = fnsl_solve(s, run);

    SolverConfig ref_cfg;
    ref_cfg.penalty = penalty;
    ref_cfg.tol = 1e-15;
    ref_cfg.max_iter = 100000;
    const FnslResult ref = fnsl_solve(s, ref_cfg);
    double ref_obj = ref.trace.iterations.back().objective;
    for (const auto& it : probe.trace.iterations) ref_obj = std::min(ref_obj, it.objective);

    std::vector<double> gaps;
    for (const auto& it : probe.trace.iterations) gaps.push_back(it.objective_ag - ref_obj);
    const double slope = loglog_slope(gaps, 10, 200);
    crit.expect(slope <= -1.8, "sparse slope " + fmt(slope));
  }

  // Low-rank plus sparse problem, p = 50, N = 200.
  {
    StructureSpec spec;
    spec.p = 50;
    spec.rank = 3;
    spec.edge_prob = 0.03;
    spec.rho = 0.7;
    const StructuredTransition truth = generate_structured(spec, 73);
    const VarSample s = simulate_var(truth, 200, 1.0, 500, 74);
    const Matrix XE = s.X.transpose() * s.E;

    CompositeConfig config;
    config.with_low_rank = config.with_sparse = true;
    config.alpha = 25.0;
    config.partition = GroupPartition::columns(50);
    config.lambda_N = 2.0 * svd(XE).singular_values(0);
    config.mu_N = 2.0 * XE.cwiseAbs().maxCoeff();
    config.solver.C = 0.0;
    config.solver.tol = 0.0;
    config.solver.max_iter = 200;
    const CompositeFit probe = afnsl_solve(s, config);

    CompositeConfig ref_cfg = config;
    ref_cfg.solver.C = 100.0;
    ref_cfg.solver.tol = 1e-15;
    ref_cfg.solver.max_iter = 100000;
    const CompositeFit ref = afnsl_solve(s, ref_cfg);
    double ref_obj = ref.trace.iterations.back().objective;
    for (const auto& it : probe.trace.iterations) ref_obj = std::min(ref_obj, it.objective);

    std::vector<double> gaps;
    for (const auto& it : probe.trace.iterations) gaps.push_back(it.objective_ag - ref_obj);
    const double slope = loglog_slope(gaps, 10, 200);
    crit.expect(slope <= -1.8, "l+s slope " + fmt(slope));
  }
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 3: solver agreement with plain ISTA") {
  CriterionCheck crit("criterion 3: FNSL/ISTA agreement");
  for (int trial = 0; trial < 10; ++trial) {
    const int p = 10 + 10 * (trial % 10);
    StructureSpec spec;
    spec.p = p;
    spec.edge_prob = std::min(1.0, 10.0 / p);
    spec.rho = 0.6;
    const StructuredTransition truth = generate_structured(spec, 300 + trial);
    const VarSample s = simulate_var(truth, 3 * p, 1.0, 300, 400 + trial);
    const Penalty penalty{PenaltyKind::l1,
                          0.1 * (s.X.transpose() * s.Y).cwiseAbs().maxCoeff(), std::nullopt};

    SolverConfig config;
    config.penalty = penalty;
    config.tol = 1e-12;
    config.max_iter = 10000;
    const FnslResult fnsl = fnsl_solve(s, config);
    const ReferenceResult ista = ista_solve(s, penalty, 100000, 1e-13);
    const double f = fnsl.trace.iterations.back().objective;
    const double rel = std::abs(f - ista.objective) / std::abs(ista.objective);
    crit.expect(rel < 1e-6, "instance " + std::to_string(trial) + " rel diff " + fmt(rel));
  }
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 4: low-rank plus sparse replication bands") {
  CriterionCheck crit("criterion 4: L+S replication");
  BenchOptions opts;
  opts.reps = 50;
  opts.seed = 2024;
  const LsBenchResult r = bench_ls(opts);

  crit.expect(r.ls.report.ee.median >= 0.20 && r.ls.report.ee.median <= 0.45,
              "L+S median EE " + fmt(r.ls.report.ee.median) + " outside [0.20, 0.45]");
  crit.expect(r.ls.report.tpr.median >= 70.0,
              "L+S median TPR " + fmt(r.ls.report.tpr.median) + " below 70");
  crit.expect(r.ls.report.far.median <= 25.0,
              "L+S median FAR " + fmt(r.ls.report.far.median) + " above 25");

  int wins = 0;
  for (size_t i = 0; i < r.ls.ee.size(); ++i)
    if (r.ls.ee[i] < r.lasso.ee[i]) ++wins;
  crit.expect(wins >= static_cast<int>(0.8 * r.ls.ee.size()),
              "L+S beats lasso in only " + std::to_string(wins) + "/50 replications");
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 5: alpha sweep monotonicity") {
  CriterionCheck crit("criterion 5: alpha sweep");
  BenchOptions opts;
  opts.reps = 30;
  opts.seed = 515;
  const auto table = bench_alpha_sweep(opts);

  int inversions = 0;
  for (size_t i = 1; i < table.size(); ++i)
    if (table[i].tpr_mean > table[i - 1].tpr_mean + 1e-9) ++inversions;
  crit.expect(inversions <= 1, std::to_string(inversions) + " TPR inversions");

  double far_mean = 0;
  for (const auto& row : table) far_mean += row.far_mean / table.size();
  for (const auto& row : table)
    crit.expect(std::abs(row.far_mean - far_mean) <= 3.0,
                "FAR at alpha " + fmt(row.alpha) + " deviates " +
                    fmt(row.far_mean - far_mean) + " points");
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 6: error scaling collapses under the rescaled sample size") {
  CriterionCheck crit("criterion 6: error scaling");
  BenchOptions opts;
  opts.reps = 10;
  opts.seed = 606;
  const auto table = bench_error_scaling(opts);

  std::vector<ScalingRow> p50, p100;
  for (const auto& row : table) (row.p == 50 ? p50 : p100).push_back(row);

  // Raw-N ordering: larger p has larger error at every shared N.
  for (size_t i = 0; i < p50.size(); ++i)
    crit.expect(p100[i].median_error >= p50[i].median_error,
                "raw-N ordering violated at N=" + std::to_string(p50[i].N));

  // Median error decreases in N for each p.
  for (const auto* curve : {&p50, &p100})
    for (size_t i = 1; i < curve->size(); ++i)
      crit.expect((*curve)[i].median_error <= (*curve)[i - 1].median_error,
                  "error not decreasing at N=" + std::to_string((*curve)[i].N));

  // Collapse: interpolate the p=100 curve (log-log) onto the p=50 rescaled
  // coordinates inside the shared range and compare.
  auto interp = [](const std::vector<ScalingRow>& curve, double x) {
    for (size_t i = 1; i < curve.size(); ++i) {
      if (x <= curve[i].rescaled_N) {
        const double x0 = std::log(curve[i - 1].rescaled_N), x1 = std::log(curve[i].rescaled_N);
        const double y0 = std::log(curve[i - 1].median_error),
                     y1 = std::log(curve[i].median_error);
        const double w = (std::log(x) - x0) / (x1 - x0);
        return std::exp(y0 + w * (y1 - y0));
      }
    }
    return curve.back().median_error;
  };
  const double lo = std::max(p50.front().rescaled_N, p100.front().rescaled_N);
  const double hi = std::min(p50.back().rescaled_N, p100.back().rescaled_N);
  int compared = 0;
  for (const auto& row : p50) {
    if (row.rescaled_N < lo || row.rescaled_N > hi) continue;
    ++compared;
    const double other = interp(p100, row.rescaled_N);
    const double rel = std::abs(other - row.median_error) /
                       std::max(row.median_error, other);
    crit.expect(rel <= 0.25, "collapse misses " + fmt(100 * rel) + "% at rescaled N " +
                                 fmt(row.rescaled_N));
  }
  crit.expect(compared >= 3, "too few shared rescaled-N points");
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 7: deviation ratios are flat against their rates") {
  CriterionCheck crit("criterion 7: deviation scaling");
  BenchOptions opts;
  opts.reps = 50;
  opts.seed = 707;
  const auto table = bench_deviation(opts);
  REQUIRE(table.size() == 8);
  crit.expect(table.back().N >= 16 * table.front().N, "N grid does not span 16x");

  auto spread = [&](auto field) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (const auto& row : table) {
      lo = std::min(lo, field(row));
      hi = std::max(hi, field(row));
    }
    return hi / lo;
  };
  const double s_max = spread([](const DeviationRow& r) { return r.ratio_max; });
  const double s_spec = spread([](const DeviationRow& r) { return r.ratio_spec; });
  const double s_group = spread([](const DeviationRow& r) { return r.ratio_group; });
  crit.expect(s_max <= 3.0, "max-norm ratio spread " + fmt(s_max));
  crit.expect(s_spec <= 3.0, "spectral ratio spread " + fmt(s_spec));
  crit.expect(s_group <= 3.0, "group ratio spread " + fmt(s_group));
  for (const auto& row : table)
    crit.expect(std::isfinite(row.ratio_gram) && row.ratio_gram > 0,
                "gram ratio degenerate at N=" + std::to_string(row.N));
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 8: low-rank recovery at p=200") {
  CriterionCheck crit("criterion 8: low-rank recovery");
  BenchOptions opts;
  opts.reps = 2;
  opts.seed = 808;
  const auto rows = bench_lowrank(opts);
  for (const auto& row : rows) {
    crit.expect(row.r_hat >= 7 && row.r_hat <= 9,
                "rep " + std::to_string(row.rep) + " recovered rank " +
                    std::to_string(row.r_hat));
    crit.expect(row.ee >= 0.45 && row.ee <= 0.70,
                "rep " + std::to_string(row.rep) + " EE " + fmt(row.ee) +
                    " outside [0.45, 0.70]");
  }
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 9: stability diagnostics hold on random structures") {
  CriterionCheck crit("criterion 9: stability diagnostics");
  auto rng = make_rng(909);
  std::uniform_int_distribution<int> dim(6, 30);
  std::uniform_real_distribution<double> radius(0.45, 0.95);
  for (int trial = 0; trial < 50; ++trial) {
    StructureSpec spec;
    spec.p = dim(rng);
    spec.rank = 1 + trial % 2;
    spec.edge_prob = 0.1;
    spec.rho = radius(rng);
    const StructuredTransition T = generate_structured(spec, 5000 + trial);
    const MuExtremes mu = mu_extremes(T.total(), 256);
    crit.expect(lemma1_bound(T) >= mu.mu_max - 1e-9,
                "lemma 1 violated at trial " + std::to_string(trial));
    const Matrix Sigma = Matrix::Identity(spec.p, spec.p);
    const SpectralDensityExtremes fx = spectral_density_extremes(T.total(), Sigma, 256);
    crit.expect(fx.m_fx >= fx.lower_bound * (1.0 - 1e-6),
                "lower sandwich violated at trial " + std::to_string(trial));
    crit.expect(fx.M_fx <= fx.upper_bound * (1.0 + 1e-6),
                "upper sandwich violated at trial " + std::to_string(trial));
  }
  CHECK(crit.failures.empty());
}

TEST_CASE("criterion 10: matrix-product counts beat the FISTA baseline") {
  CriterionCheck crit("criterion 10: AX instrumentation");
  BenchOptions opts;
  opts.reps = 10;
  opts.seed = 1010;
  const auto rows = bench_sparse_large(opts);
  int wins = 0;
  for (const auto& row : rows)
    if (row.ax_fnsl <= row.ax_fista) ++wins;
  crit.expect(wins >= 7, "FNSL needed fewer products in only " + std::to_string(wins) +
                             "/10 runs");
  CHECK(crit.failures.empty());
}

TEST_SUITE_END();
