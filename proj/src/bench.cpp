#include "lsvar/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lsvar/composite.hpp"
#include "lsvar/io.hpp"
#include "lsvar/model.hpp"
#include "lsvar/parallel.hpp"
#include "lsvar/prox.hpp"
#include "lsvar/reference.hpp"
#include "lsvar/rng.hpp"
#include "lsvar/solver.hpp"

namespace lsvar {

namespace {

constexpr int kHoldout = 10;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct RepMetrics {
  double tpr = std::numeric_limits<double>::quiet_NaN();
  double far = std::numeric_limits<double>::quiet_NaN();
  double ee = 0, pe = 0;
  double r_hat = 0;
};

MethodSummary summarize(const std::string& method, const std::vector<RepMetrics>& rows) {
  std::vector<double> tpr, far, ee, pe, r_hat;
  for (const auto& r : rows) {
    if (std::isfinite(r.tpr)) tpr.push_back(r.tpr);
    if (std::isfinite(r.far)) far.push_back(r.far);
    ee.push_back(r.ee);
    pe.push_back(r.pe);
    r_hat.push_back(r.r_hat);
  }
  MethodSummary s;
  s.method = method;
  s.report.tpr = aggregate(tpr);
  s.report.far = aggregate(far);
  s.report.ee = aggregate(ee);
  s.report.pe = aggregate(pe);
  s.report.r_hat = aggregate(r_hat);
  s.report.replications = static_cast<int>(rows.size());
  s.ee = ee;
  return s;
}

double max_abs(const Matrix& M) { return M.cwiseAbs().maxCoeff(); }

double spec_norm(const Matrix& M) { return svd(M).singular_values(0); }

/// Pick the generative spec shared by the structured suites.
StructureSpec ls_spec(int p, double rho = 0.7) {
  StructureSpec spec;
  spec.p = p;
  spec.rank = p / 25 + 1;
  spec.edge_prob = 0.03;
  spec.rho = rho;
  return spec;
}

TuningGrid two_axis_grid(const VarSample& train, bool lambda_axis, bool mu_axis, bool nu_axis,
                         int points, double ratio) {
  const Matrix XtY = train.X.transpose() * train.Y;
  TuningGrid grid;
  if (lambda_axis) grid.lambda_values = log_grid(spec_norm(XtY), ratio, points);
  if (mu_axis) grid.mu_values = log_grid(max_abs(XtY), ratio, points);
  if (nu_axis) {
    // Zero threshold for the group axis: the largest group norm of X'Y.
    grid.nu_values = log_grid(group_l2_max(XtY, GroupPartition::columns(train.p())), ratio, points);
  }
  return grid;
}

CompositeFit refit_cold(const VarSample& train, CompositeConfig config, const GridFit& selected) {
  config.lambda_N = selected.lambda;
  config.mu_N = selected.mu;
  config.nu_N = selected.nu;
  return afnsl_solve(train, config);
}

void write_method_summaries(const std::string& path, const std::vector<MethodSummary>& methods) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& m : methods) {
    nlohmann::json entry = nlohmann::json::parse(to_json(m.report));
    entry["method"] = m.method;
    doc.push_back(std::move(entry));
  }
  write_text_file(path, doc.dump(1));
}

std::string summary_line(const MethodSummary& m) {
  std::ostringstream os;
  os << m.method << ": (TPR, FAR) = (" << m.report.tpr.median << ", " << m.report.far.median
     << ")%, EE = " << m.report.ee.median << ", PE = " << m.report.pe.median;
  return os.str();
}

}  // namespace

LsBenchResult bench_ls(const BenchOptions& opts) {
  const int p = opts.p > 0 ? opts.p : 50;
  const int n = opts.n > 0 ? opts.n : 200;
  const int reps = opts.reps > 0 ? opts.reps : 50;
  const StructureSpec spec = ls_spec(p);

  std::vector<RepMetrics> rows_ols(reps), rows_lasso(reps), rows_ls(reps);
  parallel_for(reps, opts.jobs, [&](int r) {
    const uint64_t rep_seed = mix_seed(opts.seed, r);
    const StructuredTransition truth = generate_structured(spec, rep_seed);
    const Matrix B_true = truth.total();
    const VarSample full = simulate_var(truth, n + kHoldout, 1.0, 500, mix_seed(rep_seed, 11));
    const VarSample holdout = full.rows(0, kHoldout);
    const VarSample train = full.rows(kHoldout, n);

    // OLS baseline.
    {
      const Matrix B_ols = ols_solve(train);
      RepMetrics m;
      m.ee = (B_ols - B_true).norm() / B_true.norm();
      m.pe = prediction_error(B_ols, holdout);
      m.r_hat = numeric_rank(B_ols);
      rows_ols[r] = m;
    }

    // Lasso selected by AIC on the standard linear grid.
    {
      CompositeConfig proto;
      proto.with_sparse = true;
      proto.partition = GroupPartition::columns(p);
      proto.solver.max_iter = 500;
      proto.solver.tol = 1e-8;
      TuningGrid grid;
      grid.mu_values = linear_grid(max_abs(train.X.transpose() * train.Y), 100);
      grid.mu_values.erase(grid.mu_values.begin());  // drop the unregularized endpoint
      const auto fits = sweep_grid(train, proto, grid, 1);
      const size_t best = select_by_information_criterion(train, fits, proto, Criterion::AIC);
      const CompositeFit fit = refit_cold(train, proto, fits[best]);
      RepMetrics m;
      const EvalMetrics support = metrics(truth.S, fit.S_last);
      m.tpr = support.tpr;
      m.far = support.far;
      m.ee = (fit.total() - B_true).norm() / B_true.norm();
      m.pe = prediction_error(fit.total(), holdout);
      m.r_hat = numeric_rank(fit.S_last);
      rows_lasso[r] = m;
    }

    // L+S with the alpha = p/2 box, oracle-selected over the 2-d grid.
    {
      CompositeConfig proto;
      proto.with_low_rank = proto.with_sparse = true;
      proto.alpha = p / 2.0;
      proto.partition = GroupPartition::columns(p);
      proto.solver.max_iter = 400;
      proto.solver.tol = 1e-7;
      const TuningGrid grid = two_axis_grid(train, true, true, false, 8, 50.0);
      const auto fits = sweep_grid(train, proto, grid, 1);
      const OracleSelection sel = oracle_select(truth, fits);
      CompositeConfig final_config = proto;
      final_config.solver.max_iter = 2000;
      final_config.solver.tol = 1e-8;
      const CompositeFit fit = refit_cold(train, final_config, fits[sel.index]);
      RepMetrics m;
      const EvalMetrics support = metrics(truth.S, fit.S_last);
      m.tpr = support.tpr;
      m.far = support.far;
      m.ee = (fit.total() - B_true).norm() / B_true.norm();
      m.pe = prediction_error(fit.total(), holdout);
      m.r_hat = numeric_rank(fit.L_last);
      rows_ls[r] = m;
    }
  });

  LsBenchResult result;
  result.ols = summarize("ols", rows_ols);
  result.lasso = summarize("lasso", rows_lasso);
  result.ls = summarize("l+s", rows_ls);
  if (!opts.out_dir.empty()) {
    const std::string stem = opts.out_dir + "/ls_p" + std::to_string(p) + "_N" +
                             std::to_string(n) + "_seed" + std::to_string(opts.seed);
    write_method_summaries(stem + ".json", {result.ols, result.lasso, result.ls});
    std::ofstream out(stem + ".csv");
    out << "rep,ee_ols,ee_lasso,ee_ls\n";
    for (int r = 0; r < reps; ++r)
      out << r << ',' << result.ols.ee[r] << ',' << result.lasso.ee[r] << ','
          << result.ls.ee[r] << '\n';
  }
  return result;
}

std::vector<AlphaSweepRow> bench_alpha_sweep(const BenchOptions& opts) {
  const int p = opts.p > 0 ? opts.p : 50;
  const int n = opts.n > 0 ? opts.n : 200;
  const int reps = opts.reps > 0 ? opts.reps : 30;
  const StructureSpec spec = ls_spec(p);
  const std::vector<double> alphas = {p / 8.0, p / 4.0, p / 2.0, 1.0 * p, 2.0 * p, 4.0 * p,
                                      8.0 * p};

  // One dataset per replication, shared across the alpha values so that the
  // sweep isolates the effect of the box radius.
  std::vector<StructuredTransition> truths(reps);
  std::vector<VarSample> trains;
  trains.resize(reps);
  for (int r = 0; r < reps; ++r) {
    const uint64_t rep_seed = mix_seed(opts.seed, r);
    truths[r] = generate_structured(spec, rep_seed);
    trains[r] = simulate_var(truths[r], n, 1.0, 500, mix_seed(rep_seed, 11));
  }

  std::vector<AlphaSweepRow> table(alphas.size());
  for (size_t ai = 0; ai < alphas.size(); ++ai) {
    std::vector<double> tprs(reps), fars(reps);
    parallel_for(reps, opts.jobs, [&](int r) {
      CompositeConfig proto;
      proto.with_low_rank = proto.with_sparse = true;
      proto.alpha = alphas[ai];
      proto.partition = GroupPartition::columns(p);
      proto.solver.max_iter = 400;
      proto.solver.tol = 1e-7;
      const TuningGrid grid = two_axis_grid(trains[r], true, true, false, 6, 50.0);
      const auto fits = sweep_grid(trains[r], proto, grid, 1);
      const OracleSelection sel = oracle_select(truths[r], fits);
      const CompositeFit fit = refit_cold(trains[r], proto, fits[sel.index]);
      const EvalMetrics support = metrics(truths[r].S, fit.S_last);
      tprs[r] = support.tpr;
      fars[r] = support.far;
    });
    AlphaSweepRow row;
    row.alpha = alphas[ai];
    row.tpr_mean = aggregate(tprs).mean;
    row.far_mean = aggregate(fars).mean;
    table[ai] = row;
  }

  if (!opts.out_dir.empty()) {
    std::ofstream out(opts.out_dir + "/alpha_sweep_p" + std::to_string(p) + "_N" +
                      std::to_string(n) + "_seed" + std::to_string(opts.seed) + ".csv");
    out << "alpha,tpr_mean,far_mean\n";
    for (const auto& row : table)
      out << row.alpha << ',' << row.tpr_mean << ',' << row.far_mean << '\n';
  }
  return table;
}

std::vector<SolverComparisonRow> bench_sparse_large(const BenchOptions& opts) {
  const int p = opts.p > 0 ? opts.p : (opts.full_scale ? 1000 : 200);
  const int n = opts.n > 0 ? opts.n : (opts.full_scale ? 2000 : 400);
  const int reps = opts.reps > 0 ? opts.reps : 10;

  StructureSpec spec;
  spec.p = p;
  spec.edge_prob = 10.0 / p;
  spec.rho = 0.7;

  std::vector<SolverComparisonRow> rows(reps);
  parallel_for(reps, opts.jobs, [&](int r) {
    const uint64_t rep_seed = mix_seed(opts.seed, r);
    const StructuredTransition truth = generate_structured(spec, rep_seed);
    const VarSample sample = simulate_var(truth, n, 1.0, 500, mix_seed(rep_seed, 11));
    // Theory-floor weight from the realized noise interaction.
    const double lambda = 2.0 * max_abs(sample.X.transpose() * sample.E);

    SolverComparisonRow row;
    row.rep = r;

    SolverConfig config;
    config.penalty = {PenaltyKind::l1, lambda, std::nullopt};
    auto t0 = std::chrono::steady_clock::now();
    const FnslResult fnsl = fnsl_solve(sample, config);
    row.seconds_fnsl = seconds_since(t0);
    row.objective_fnsl = fnsl.trace.iterations.back().objective;
    row.iterations_fnsl = static_cast<int>(fnsl.trace.iterations.size());
    row.ax_fnsl = fnsl.trace.total_ax;
    row.metrics_fnsl = metrics(truth.S, fnsl.trace.B_last);

    t0 = std::chrono::steady_clock::now();
    const ReferenceResult fista = fista_solve(sample, config.penalty);
    row.seconds_fista = seconds_since(t0);
    row.objective_fista = fista.objective;
    row.iterations_fista = fista.iterations;
    row.ax_fista = fista.ax_count;
    row.metrics_fista = metrics(truth.S, fista.B);
    rows[r] = row;
  });

  if (!opts.out_dir.empty()) {
    std::ofstream out(opts.out_dir + "/sparse_large_p" + std::to_string(p) + "_N" +
                      std::to_string(n) + "_seed" + std::to_string(opts.seed) + ".csv");
    out << "rep,objective_fnsl,objective_fista,iterations_fnsl,iterations_fista,"
           "ax_fnsl,ax_fista,seconds_fnsl,seconds_fista,tpr_fnsl,far_fnsl,ee_fnsl,"
           "tpr_fista,far_fista,ee_fista\n";
    for (const auto& r : rows) {
      out << r.rep << ',' << r.objective_fnsl << ',' << r.objective_fista << ','
          << r.iterations_fnsl << ',' << r.iterations_fista << ',' << r.ax_fnsl << ','
          << r.ax_fista << ',' << r.seconds_fnsl << ',' << r.seconds_fista << ','
          << r.metrics_fnsl.tpr << ',' << r.metrics_fnsl.far << ',' << r.metrics_fnsl.ee << ','
          << r.metrics_fista.tpr << ',' << r.metrics_fista.far << ',' << r.metrics_fista.ee
          << '\n';
    }
  }
  return rows;
}

std::vector<LowRankRow> bench_lowrank(const BenchOptions& opts) {
  const int p = opts.p > 0 ? opts.p : 200;
  const int n = opts.n > 0 ? opts.n : 2000;
  const int reps = opts.reps > 0 ? opts.reps : 2;

  StructureSpec spec;
  spec.p = p;
  spec.rank = p / 25 + 1;
  spec.rho = 0.7;

  std::vector<LowRankRow> rows(reps);
  parallel_for(reps, opts.jobs, [&](int r) {
    const uint64_t rep_seed = mix_seed(opts.seed, r);
    const StructuredTransition truth = generate_structured(spec, rep_seed);
    const VarSample sample = simulate_var(truth, n, 1.0, 500, mix_seed(rep_seed, 11));

    CompositeConfig proto;
    proto.with_low_rank = true;
    proto.partition = GroupPartition::columns(p);
    proto.solver.max_iter = 300;
    proto.solver.tol = 1e-7;
    TuningGrid grid;
    grid.lambda_values = log_grid(spec_norm(sample.X.transpose() * sample.Y), 300.0, 12);
    const auto fits = sweep_grid(sample, proto, grid, 1);
    const OracleSelection sel = oracle_select(truth, fits);
    CompositeConfig final_config = proto;
    final_config.solver.max_iter = 1000;
    final_config.solver.tol = 1e-8;
    const CompositeFit fit = refit_cold(sample, final_config, fits[sel.index]);

    LowRankRow row;
    row.rep = r;
    row.r_hat = numeric_rank(fit.L_last);
    row.ee = (fit.total() - truth.total()).norm() / truth.total().norm();
    row.lambda = fits[sel.index].lambda;
    rows[r] = row;
  });

  if (!opts.out_dir.empty()) {
    std::ofstream out(opts.out_dir + "/lowrank_p" + std::to_string(p) + "_N" + std::to_string(n) +
                      "_seed" + std::to_string(opts.seed) + ".csv");
    out << "rep,r_hat,ee,lambda\n";
    for (const auto& r : rows) out << r.rep << ',' << r.r_hat << ',' << r.ee << ',' << r.lambda
                                   << '\n';
  }
  return rows;
}

SgBenchResult bench_sg(const BenchOptions& opts) {
  const int p = opts.p > 0 ? opts.p : 50;
  const int n = opts.n > 0 ? opts.n : 200;
  const int reps = opts.reps > 0 ? opts.reps : 30;

  StructureSpec spec;
  spec.p = p;
  spec.edge_prob = 0.05;
  spec.hub_groups = 2;
  spec.rho = 0.7;

  std::vector<RepMetrics> rows_lasso(reps), rows_sg(reps);
  parallel_for(reps, opts.jobs, [&](int r) {
    const uint64_t rep_seed = mix_seed(opts.seed, r);
    const StructuredTransition truth = generate_structured(spec, rep_seed);
    const Matrix B_true = truth.total();
    const VarSample full = simulate_var(truth, n + kHoldout, 1.0, 500, mix_seed(rep_seed, 11));
    const VarSample holdout = full.rows(0, kHoldout);
    const VarSample train = full.rows(kHoldout, n);

    {
      CompositeConfig proto;
      proto.with_sparse = true;
      proto.partition = GroupPartition::columns(p);
      proto.solver.max_iter = 500;
      TuningGrid grid;
      grid.mu_values = linear_grid(max_abs(train.X.transpose() * train.Y), 100);
      grid.mu_values.erase(grid.mu_values.begin());
      const auto fits = sweep_grid(train, proto, grid, 1);
      const size_t best = select_by_information_criterion(train, fits, proto, Criterion::AIC);
      const CompositeFit fit = refit_cold(train, proto, fits[best]);
      RepMetrics m;
      const EvalMetrics support = metrics(B_true, fit.S_last);
      m.tpr = support.tpr;
      m.far = support.far;
      m.ee = (fit.total() - B_true).norm() / B_true.norm();
      m.pe = prediction_error(fit.total(), holdout);
      rows_lasso[r] = m;
    }

    {
      CompositeConfig proto;
      proto.with_sparse = proto.with_group = true;
      proto.gamma = p / 2.0;
      proto.partition = GroupPartition::columns(p);
      proto.solver.max_iter = 400;
      proto.solver.tol = 1e-7;
      const TuningGrid grid = two_axis_grid(train, false, true, true, 6, 50.0);
      const auto fits = sweep_grid(train, proto, grid, 1);
      const OracleSelection sel = oracle_select(truth, fits);
      const CompositeFit fit = refit_cold(train, proto, fits[sel.index]);
      RepMetrics m;
      const EvalMetrics support = metrics(B_true, fit.total_last());
      m.tpr = support.tpr;
      m.far = support.far;
      m.ee = (fit.total() - B_true).norm() / B_true.norm();
      m.pe = prediction_error(fit.total(), holdout);
      rows_sg[r] = m;
    }
  });

  SgBenchResult result;
  result.lasso = summarize("lasso", rows_lasso);
  result.sg = summarize("s+g", rows_sg);
  if (!opts.out_dir.empty()) {
    write_method_summaries(opts.out_dir + "/sg_p" + std::to_string(p) + "_N" + std::to_string(n) +
                               "_seed" + std::to_string(opts.seed) + ".json",
                           {result.lasso, result.sg});
  }
  return result;
}

LsgBenchResult bench_lsg(const BenchOptions& opts) {
  const int p = opts.p > 0 ? opts.p : 50;
  const int n = opts.n > 0 ? opts.n : 300;
  const int reps = opts.reps > 0 ? opts.reps : 20;

  StructureSpec spec = ls_spec(p);
  spec.hub_groups = 2;

  std::vector<RepMetrics> rows_sg(reps), rows_ls(reps), rows_lsg(reps);
  parallel_for(reps, opts.jobs, [&](int r) {
    const uint64_t rep_seed = mix_seed(opts.seed, r);
    const StructuredTransition truth = generate_structured(spec, rep_seed);
    const Matrix B_true = truth.total();
    const Matrix sparse_support = truth.S + truth.G;
    const VarSample full = simulate_var(truth, n + kHoldout, 1.0, 500, mix_seed(rep_seed, 11));
    const VarSample holdout = full.rows(0, kHoldout);
    const VarSample train = full.rows(kHoldout, n);

    auto run = [&](CompositeConfig proto, const TuningGrid& grid, bool use_total_support) {
      const auto fits = sweep_grid(train, proto, grid, 1);
      const OracleSelection sel = oracle_select(truth, fits);
      const CompositeFit fit = refit_cold(train, proto, fits[sel.index]);
      RepMetrics m;
      const Matrix est_support = use_total_support
                                     ? Matrix(fit.S_last + fit.G_last)
                                     : fit.S_last;
      const EvalMetrics support = metrics(sparse_support, est_support);
      m.tpr = support.tpr;
      m.far = support.far;
      m.ee = (fit.total() - B_true).norm() / B_true.norm();
      m.pe = prediction_error(fit.total(), holdout);
      m.r_hat = numeric_rank(fit.L_last);
      return m;
    };

    {
      CompositeConfig proto;
      proto.with_sparse = proto.with_group = true;
      proto.gamma = p / 2.0;
      proto.partition = GroupPartition::columns(p);
      proto.solver.max_iter = 400;
      proto.solver.tol = 1e-7;
      rows_sg[r] = run(proto, two_axis_grid(train, false, true, true, 5, 50.0), true);
    }
    {
      CompositeConfig proto;
      proto.with_low_rank = proto.with_sparse = true;
      proto.alpha = p / 2.0;
      proto.partition = GroupPartition::columns(p);
      proto.solver.max_iter = 400;
      proto.solver.tol = 1e-7;
      rows_ls[r] = run(proto, two_axis_grid(train, true, true, false, 5, 50.0), false);
    }
    {
      CompositeConfig proto;
      proto.with_low_rank = proto.with_sparse = proto.with_group = true;
      proto.alpha = p / 2.0;
      proto.partition = GroupPartition::columns(p);
      proto.solver.max_iter = 300;
      proto.solver.tol = 1e-7;
      rows_lsg[r] = run(proto, two_axis_grid(train, true, true, true, 4, 50.0), true);
    }
  });

  LsgBenchResult result;
  result.sg = summarize("s+g", rows_sg);
  result.ls = summarize("l+s", rows_ls);
  result.lsg = summarize("l+s+g", rows_lsg);
  if (!opts.out_dir.empty()) {
    write_method_summaries(opts.out_dir + "/lsg_p" + std::to_string(p) + "_N" +
                               std::to_string(n) + "_seed" + std::to_string(opts.seed) + ".json",
                           {result.sg, result.ls, result.lsg});
  }
  return result;
}

std::vector<DeviationRow> bench_deviation(const BenchOptions& opts) {
  const int p = opts.p > 0 ? opts.p : 20;
  const int reps = opts.reps > 0 ? opts.reps : 50;

  StructureSpec spec;
  spec.p = p;
  spec.edge_prob = 0.3;
  spec.rho = 0.5;
  const StructuredTransition truth = generate_structured(spec, mix_seed(opts.seed, 999));

  std::vector<int> N_grid;
  if (opts.n > 0) {
    N_grid = {opts.n};
  } else {
    // Eight points spanning a 16x range.
    const double base = 125.0, factor = std::pow(16.0, 1.0 / 7.0);
    for (int i = 0; i < 8; ++i)
      N_grid.push_back(static_cast<int>(std::lround(base * std::pow(factor, i))));
  }

  const auto table =
      deviation_mc(truth, 1.0, N_grid, reps, GroupPartition::columns(p), opts.seed, opts.jobs);
  if (!opts.out_dir.empty()) {
    std::ofstream out(opts.out_dir + "/deviation_p" + std::to_string(p) + "_seed" +
                      std::to_string(opts.seed) + ".csv");
    out << "N,ratio_max,ratio_spec,ratio_group,ratio_gram\n";
    for (const auto& row : table)
      out << row.N << ',' << row.ratio_max << ',' << row.ratio_spec << ',' << row.ratio_group
          << ',' << row.ratio_gram << '\n';
  }
  return table;
}

std::vector<ScalingRow> bench_error_scaling(const BenchOptions& opts) {
  const int reps = opts.reps > 0 ? opts.reps : 10;
  std::vector<int> p_list = {50, 100};
  if (opts.p > 0) p_list = {opts.p};
  std::vector<int> N_grid;
  const double lo = 150.0, hi = 5500.0;
  for (int i = 0; i < 8; ++i)
    N_grid.push_back(static_cast<int>(std::lround(lo * std::pow(hi / lo, i / 7.0))));

  const auto table = error_scaling_experiment(p_list, 2, N_grid, reps, opts.seed, opts.jobs);
  if (!opts.out_dir.empty()) {
    std::ofstream out(opts.out_dir + "/error_scaling_seed" + std::to_string(opts.seed) + ".csv");
    out << "p,N,rescaled_N,median_error\n";
    for (const auto& row : table)
      out << row.p << ',' << row.N << ',' << row.rescaled_N << ',' << row.median_error << '\n';
  }
  return table;
}

std::string run_bench_suite(const std::string& suite, const BenchOptions& opts) {
  std::ostringstream os;
  if (suite == "l+s") {
    const LsBenchResult r = bench_ls(opts);
    os << summary_line(r.ols) << '\n' << summary_line(r.lasso) << '\n' << summary_line(r.ls)
       << '\n';
  } else if (suite == "alpha-sweep") {
    for (const auto& row : bench_alpha_sweep(opts))
      os << "alpha=" << row.alpha << ": TPR=" << row.tpr_mean << "%, FAR=" << row.far_mean
         << "%\n";
  } else if (suite == "sparse-large") {
    long ax_fnsl = 0, ax_fista = 0;
    int wins = 0;
    const auto rows = bench_sparse_large(opts);
    for (const auto& r : rows) {
      ax_fnsl += r.ax_fnsl;
      ax_fista += r.ax_fista;
      if (r.ax_fnsl <= r.ax_fista) ++wins;
    }
    os << "FNSL mean AX = " << static_cast<double>(ax_fnsl) / rows.size()
       << ", FISTA mean AX = " << static_cast<double>(ax_fista) / rows.size() << ", FNSL <= FISTA in "
       << wins << "/" << rows.size() << " runs\n";
  } else if (suite == "lowrank") {
    for (const auto& r : bench_lowrank(opts))
      os << "rep " << r.rep << ": r_hat=" << r.r_hat << ", EE=" << r.ee
         << ", lambda=" << r.lambda << '\n';
  } else if (suite == "s+g") {
    const SgBenchResult r = bench_sg(opts);
    os << summary_line(r.lasso) << '\n' << summary_line(r.sg) << '\n';
  } else if (suite == "l+s+g") {
    const LsgBenchResult r = bench_lsg(opts);
    os << summary_line(r.sg) << '\n' << summary_line(r.ls) << '\n' << summary_line(r.lsg) << '\n';
  } else if (suite == "deviation-mc") {
    for (const auto& row : bench_deviation(opts))
      os << "N=" << row.N << ": max=" << row.ratio_max << ", spec=" << row.ratio_spec
         << ", group=" << row.ratio_group << ", gram=" << row.ratio_gram << '\n';
  } else if (suite == "error-scaling") {
    for (const auto& row : bench_error_scaling(opts))
      os << "p=" << row.p << ", N=" << row.N << ", rescaled=" << row.rescaled_N
         << ", median_err=" << row.median_error << '\n';
  } else {
    throw ParameterError("unknown bench suite '" + suite + "'");
  }
  return os.str();
}

}  // namespace lsvar
