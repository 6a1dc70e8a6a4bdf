#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsvar/bench.hpp"
#include "lsvar/composite.hpp"
#include "lsvar/io.hpp"
#include "lsvar/model.hpp"
#include "lsvar/parallel.hpp"
#include "lsvar/prox.hpp"
#include "lsvar/rng.hpp"
#include "lsvar/stability.hpp"
#include "lsvar/tuning.hpp"

namespace {

using namespace lsvar;

std::string out_path(const std::string& path) {
  const char* dir = std::getenv("LSVAR_OUT_DIR");
  if (!dir || *dir == '\0' || std::filesystem::path(path).is_absolute()) return path;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / path).string();
}

struct SimulateArgs {
  int p = 50, n = 200, rank = 0, hub_groups = 0, burn_in = 500;
  double sparsity = 0.0, rho = 0.7, sigma = 1.0;
  uint64_t seed = 42;
  std::string out = "sim";
};

int cmd_simulate(const SimulateArgs& args) {
  StructureSpec spec;
  spec.p = args.p;
  spec.rank = args.rank;
  spec.edge_prob = args.sparsity;
  spec.hub_groups = args.hub_groups;
  spec.rho = args.rho;
  const StructuredTransition truth = generate_structured(spec, args.seed);
  const VarSample sample =
      simulate_var(truth, args.n, args.sigma, args.burn_in, mix_seed(args.seed, 1));

  write_text_file(out_path(args.out + "_truth.json"), to_json(truth));
  write_csv_matrix_file(out_path(args.out + "_series.csv"), sample.to_series());
  std::cout << to_json(diagnose(truth, args.sigma)) << std::endl;
  return 0;
}

struct EstimateArgs {
  std::string series, model = "l+s", truth, tune, out = "fit";
  double lambda = -1, mu = -1, nu = -1;
  double alpha_div = 0, beta = 0, gamma_div = 0;
  int grid_points = 0, window = 500, val = 50, stride = 25, jobs = 0;
  int max_iter = 2000;
  double tol = 1e-8;
};

int cmd_estimate(const EstimateArgs& args) {
  const Matrix series = read_csv_matrix_file(args.series);
  const VarSample sample = VarSample::from_series(series);
  const int p = sample.p();

  StructuredTransition truth;
  const bool have_truth = !args.truth.empty();
  if (have_truth) truth = structured_transition_from_json(read_text_file(args.truth));

  StructuredTransition estimate = StructuredTransition::zero(p);
  SolveTrace trace;

  if (args.model == "ols") {
    estimate.S = ols_solve(sample);
  } else {
    CompositeConfig config = CompositeConfig::for_model(args.model, p);
    if (args.alpha_div > 0) config.alpha = p / args.alpha_div;
    if (args.beta > 0) config.beta = args.beta;
    if (args.gamma_div > 0) config.gamma = p / args.gamma_div;
    config.solver.max_iter = args.max_iter;
    config.solver.tol = args.tol;
    config.lambda_N = std::max(args.lambda, 0.0);
    config.mu_N = std::max(args.mu, 0.0);
    config.nu_N = std::max(args.nu, 0.0);

    CompositeFit fit;
    if (!args.tune.empty()) {
      const Matrix XtY = sample.X.transpose() * sample.Y;
      const int def_points =
          (config.with_low_rank + config.with_sparse + config.with_group) > 1 ? 8 : 100;
      const int points = args.grid_points > 0 ? args.grid_points : def_points;
      TuningGrid grid;
      if (config.with_low_rank)
        grid.lambda_values = log_grid(svd(XtY).singular_values(0), 100.0, points);
      if (config.with_sparse) {
        grid.mu_values = linear_grid(XtY.cwiseAbs().maxCoeff(), points + 1);
        grid.mu_values.erase(grid.mu_values.begin());
      }
      if (config.with_group) {
        grid.nu_values = linear_grid(group_l2_max(XtY, config.partition), points + 1);
        grid.nu_values.erase(grid.nu_values.begin());
      }

      const Criterion kind = criterion_from_string(args.tune);
      double sel_lambda = 0, sel_mu = 0, sel_nu = 0;
      std::vector<GridFit> fits;
      if (kind == Criterion::forward_cv) {
        const ForwardCvResult cv =
            forward_cv(series, config, grid, args.window, args.val, args.stride, args.jobs);
        sel_lambda = cv.lambda;
        sel_mu = cv.mu;
        sel_nu = cv.nu;
        std::ofstream scores(out_path(args.out + "_scores.csv"));
        scores << "lambda,mu,nu,criterion,score,rank,nnz\n";
        for (const auto& row : cv.table)
          scores << row.lambda << ',' << row.mu << ',' << row.nu << ",forward_cv,"
                 << row.mean_err << ",,\n";
      } else {
        fits = sweep_grid(sample, config, grid, args.jobs);
        size_t best;
        if (kind == Criterion::oracle) {
          if (!have_truth)
            throw ParameterError("estimate: --tune oracle needs --truth");
          best = oracle_select(truth, fits).index;
        } else {
          best = select_by_information_criterion(sample, fits, config, kind);
        }
        sel_lambda = fits[best].lambda;
        sel_mu = fits[best].mu;
        sel_nu = fits[best].nu;
        std::ofstream scores(out_path(args.out + "_scores.csv"));
        scores << "lambda,mu,nu,criterion,score,rank,nnz\n";
        for (const auto& gf : fits) {
          double score = std::numeric_limits<double>::quiet_NaN();
          if (kind == Criterion::AIC || kind == Criterion::BIC)
            score = information_criterion(sample, gf.fit, config, kind);
          else if (have_truth)
            score = (gf.fit.total() - truth.total()).norm() / truth.total().norm();
          StructuredTransition probe = StructuredTransition::zero(p);
          probe.partition = config.partition;
          probe.G = gf.fit.G_last;
          scores << gf.lambda << ',' << gf.mu << ',' << gf.nu << ','
                 << (kind == Criterion::AIC ? "aic" : kind == Criterion::BIC ? "bic" : "oracle")
                 << ',' << score << ',' << numeric_rank(gf.fit.L_last) << ','
                 << (gf.fit.S_last.array().abs() > 0.0).count() << '\n';
        }
      }
      config.lambda_N = sel_lambda;
      config.mu_N = sel_mu;
      config.nu_N = sel_nu;
    }
    fit = afnsl_solve(sample, config);
    estimate.L = fit.L;
    estimate.S = fit.S;
    estimate.G = fit.G;
    estimate.partition = config.partition;
    trace = std::move(fit.trace);

    // Granger edges from the exact-support iterates.
    write_edge_list_csv_file(out_path(args.out + "_edges.csv"),
                             config.with_group ? Matrix(fit.S_last + fit.G_last) : fit.S_last);
    write_trace_csv_file(out_path(args.out + "_trace.csv"), trace);
  }

  write_text_file(out_path(args.out + "_components.json"), to_json(estimate));

  if (have_truth) {
    EvalReport report;
    const EvalMetrics m = metrics(truth.total(), estimate.total());
    report.tpr = {m.tpr, 0, m.tpr};
    report.far = {m.far, 0, m.far};
    report.ee = {m.ee, 0, m.ee};
    report.r_hat = {static_cast<double>(numeric_rank(estimate.L)), 0,
                    static_cast<double>(numeric_rank(estimate.L))};
    report.replications = 1;
    write_text_file(out_path(args.out + "_eval.json"), to_json(report));
  }
  std::cout << "estimate: wrote " << out_path(args.out + "_components.json") << std::endl;
  return 0;
}

struct DiagnoseArgs {
  std::string components;
  double sigma = 1.0;
  int grid = 512;
};

int cmd_diagnose(const DiagnoseArgs& args) {
  const StructuredTransition T = structured_transition_from_json(read_text_file(args.components));
  std::cout << to_json(diagnose(T, args.sigma, args.grid)) << std::endl;
  return 0;
}

struct BenchArgs {
  std::string suite;
  BenchOptions opts;
};

int cmd_bench(const BenchArgs& args) {
  BenchOptions opts = args.opts;
  if (!opts.out_dir.empty()) {
    opts.out_dir = out_path(opts.out_dir);
    std::filesystem::create_directories(opts.out_dir);
  }
  std::cout << run_bench_suite(args.suite, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-rank plus structured sparse VAR(1) estimation"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Generate a structured VAR and sample a path");
  simulate->add_option("--p", sim.p, "series dimension");
  simulate->add_option("--n", sim.n, "sample size");
  simulate->add_option("--rank", sim.rank, "rank of the low-rank component (0 = none)");
  simulate->add_option("--sparsity", sim.sparsity, "edge probability of the sparse component");
  simulate->add_option("--hub-groups", sim.hub_groups, "nonzero column groups (0 = none)");
  simulate->add_option("--rho", sim.rho, "target spectral radius in (0,1)");
  simulate->add_option("--sigma", sim.sigma, "innovation standard deviation");
  simulate->add_option("--burnin", sim.burn_in, "burn-in steps");
  simulate->add_option("--seed", sim.seed, "rng seed");
  simulate->add_option("--out", sim.out, "output file prefix");

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Fit a structured transition from a series CSV");
  estimate->add_option("--series", est.series, "input series CSV")->required();
  estimate->add_option("--model", est.model,
                       "sparse|group|lowrank|l+s|l+g|s+g|l+s+g|ols");
  estimate->add_option("--lambda", est.lambda, "nuclear weight");
  estimate->add_option("--mu", est.mu, "l1 weight");
  estimate->add_option("--nu", est.nu, "group weight");
  estimate->add_option("--alpha-div", est.alpha_div, "set alpha = p / alpha-div");
  estimate->add_option("--beta", est.beta, "group box numerator");
  estimate->add_option("--gamma-div", est.gamma_div, "set gamma = p / gamma-div");
  estimate->add_option("--tune", est.tune, "aic|bic|forward-cv|oracle");
  estimate->add_option("--grid-points", est.grid_points, "grid points per axis");
  estimate->add_option("--window", est.window, "forward-cv training window");
  estimate->add_option("--val", est.val, "forward-cv validation window");
  estimate->add_option("--stride", est.stride, "forward-cv stride");
  estimate->add_option("--jobs", est.jobs, "worker threads");
  estimate->add_option("--max-iter", est.max_iter, "iteration cap");
  estimate->add_option("--tol", est.tol, "stopping tolerance");
  estimate->add_option("--truth", est.truth, "truth JSON for oracle tuning / evaluation");
  estimate->add_option("--out", est.out, "output file prefix");

  DiagnoseArgs diag;
  auto* diagnose_cmd = app.add_subcommand("diagnose", "Stability diagnostics of a transition");
  diagnose_cmd->add_option("--components", diag.components, "transition JSON")->required();
  diagnose_cmd->add_option("--sigma", diag.sigma, "innovation standard deviation");
  diagnose_cmd->add_option("--grid", diag.grid, "theta grid size");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a replication suite");
  bench_cmd
      ->add_option("suite", bench.suite,
                   "sparse-large|lowrank|l+s|l+s+g|s+g|alpha-sweep|error-scaling|deviation-mc")
      ->required();
  bench_cmd->add_option("--p", bench.opts.p, "dimension override");
  bench_cmd->add_option("--n", bench.opts.n, "sample size override");
  bench_cmd->add_option("--reps", bench.opts.reps, "replication count");
  bench_cmd->add_option("--jobs", bench.opts.jobs, "worker threads");
  bench_cmd->add_option("--seed", bench.opts.seed, "master seed");
  bench_cmd->add_option("--out-dir", bench.opts.out_dir, "table output directory");
  bench_cmd->add_flag("--full-scale", bench.opts.full_scale, "paper-scale dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim);
    if (estimate->parsed()) return cmd_estimate(est);
    if (diagnose_cmd->parsed()) return cmd_diagnose(diag);
    if (bench_cmd->parsed()) return cmd_bench(bench);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  }
  return 0;
}
