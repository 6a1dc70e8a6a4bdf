#include "lsvar/tuning.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lsvar/parallel.hpp"

namespace lsvar {

Criterion criterion_from_string(const std::string& name) {
  if (name == "aic") return Criterion::AIC;
  if (name == "bic") return Criterion::BIC;
  if (name == "forward-cv" || name == "forward_cv") return Criterion::forward_cv;
  if (name == "oracle") return Criterion::oracle;
  throw ParameterError("unknown criterion '" + name + "'");
}

void TuningGrid::validate() const {
  auto check_axis = [](const std::vector<double>& axis, const char* name) {
    if (axis.empty()) throw ParameterError(std::string("TuningGrid: empty ") + name + " axis");
    for (size_t i = 0; i < axis.size(); ++i) {
      if (!(axis[i] >= 0.0)) throw ParameterError("TuningGrid: negative value");
      if (i > 0 && axis[i] < axis[i - 1])
        throw ParameterError(std::string("TuningGrid: ") + name + " axis must ascend");
    }
  };
  check_axis(lambda_values, "lambda");
  check_axis(mu_values, "mu");
  check_axis(nu_values, "nu");
}

std::vector<double> linear_grid(double top, int count) {
  if (count < 1 || !(top >= 0.0)) throw ParameterError("linear_grid: bad arguments");
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = count == 1 ? top : top * i / (count - 1);
  return grid;
}

std::vector<double> log_grid(double top, double ratio, int count) {
  if (count < 1 || !(top > 0.0) || !(ratio > 1.0)) throw ParameterError("log_grid: bad arguments");
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i)
    grid[i] = count == 1 ? top : top / std::pow(ratio, 1.0 - static_cast<double>(i) / (count - 1));
  return grid;
}

std::vector<GridFit> sweep_grid(const VarSample& sample, const CompositeConfig& prototype,
                                const TuningGrid& grid, int jobs) {
  grid.validate();
  auto axis_or_zero = [](const std::vector<double>& axis, bool active, const char* name) {
    if (!active && (axis.size() != 1 || axis[0] != 0.0))
      throw ParameterError(std::string("sweep_grid: ") + name +
                           " axis given for an inactive component");
    return axis;
  };
  // Descending order: index 0 is the most regularized point.
  auto descending = [](std::vector<double> axis) {
    std::reverse(axis.begin(), axis.end());
    return axis;
  };
  const auto lambdas =
      descending(axis_or_zero(grid.lambda_values, prototype.with_low_rank, "lambda"));
  const auto mus = descending(axis_or_zero(grid.mu_values, prototype.with_sparse, "mu"));
  const auto nus = descending(axis_or_zero(grid.nu_values, prototype.with_group, "nu"));

  const size_t inner = mus.size() * nus.size();
  std::vector<GridFit> fits(lambdas.size() * inner);
  // Each lambda row is one warm-start chain; rows run in parallel.
  parallel_for(static_cast<int>(lambdas.size()), jobs, [&](int li) {
    const CompositeFit* warm = nullptr;
    for (size_t mi = 0; mi < mus.size(); ++mi) {
      for (size_t ni = 0; ni < nus.size(); ++ni) {
        CompositeConfig config = prototype;
        config.lambda_N = lambdas[li];
        config.mu_N = mus[mi];
        config.nu_N = nus[ni];
        GridFit& slot = fits[li * inner + mi * nus.size() + ni];
        slot.lambda = lambdas[li];
        slot.mu = mus[mi];
        slot.nu = nus[ni];
        slot.fit = afnsl_solve(sample, config, warm);
        warm = &slot.fit;
      }
    }
  });
  return fits;
}

double degrees_of_freedom(const CompositeFit& fit, const CompositeConfig& config) {
  double df = 0;
  const int p = static_cast<int>(fit.S_last.rows());
  if (config.with_sparse) df += (fit.S_last.array().abs() > 0.0).count();
  if (config.with_group) {
    StructuredTransition probe = StructuredTransition::zero(p);
    probe.partition = config.partition;
    probe.G = fit.G_last;
    df += probe.group_count() * config.partition.mean_group_size();
  }
  if (config.with_low_rank) {
    const double r = numeric_rank(fit.L_last);
    df += r * (2.0 * p - r);
  }
  return df;
}

double information_criterion(const VarSample& sample, const CompositeFit& fit,
                             const CompositeConfig& config, Criterion kind) {
  if (kind != Criterion::AIC && kind != Criterion::BIC)
    throw ParameterError("information_criterion: kind must be AIC or BIC");
  const double N = sample.N();
  const double rss = (sample.Y - sample.X * fit.total()).squaredNorm();
  if (rss <= 0.0) throw NumericError("information_criterion: zero residual, degenerate fit");
  const double df = degrees_of_freedom(fit, config);
  const double penalty = kind == Criterion::AIC ? 2.0 * df : std::log(N) * df;
  return N * std::log(rss / N) + penalty;
}

size_t select_by_information_criterion(const VarSample& sample, const std::vector<GridFit>& fits,
                                       const CompositeConfig& config, Criterion kind) {
  if (fits.empty()) throw ParameterError("select_by_information_criterion: no fits");
  size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < fits.size(); ++i) {
    const double score = information_criterion(sample, fits[i].fit, config, kind);
    if (score < best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

ForwardCvResult forward_cv(const Matrix& series, const CompositeConfig& prototype,
                           const TuningGrid& grid, int W, int W_prime, int stride, int jobs) {
  grid.validate();
  if (W < 2 || W_prime < 1 || stride < 1)
    throw ParameterError("forward_cv: window, validation window, and stride must be positive");
  const int m = static_cast<int>(series.rows());
  if (m < W + W_prime + stride)
    throw ParameterError("forward_cv: series has " + std::to_string(m) +
                         " observations, needs at least " +
                         std::to_string(W + W_prime + stride));

  int folds = 0;
  while (W + stride * folds + W_prime <= m) ++folds;

  struct FoldErrors {
    std::vector<double> err;
  };
  std::vector<FoldErrors> per_fold(folds);
  parallel_for(folds, jobs, [&](int f) {
    const int t = W + stride * f;  // first validated time index
    const VarSample train = VarSample::from_series(series.middleRows(t - W, W));
    // W_prime one-step-ahead pairs need W_prime + 1 observations from t-1 on.
    const VarSample validate = VarSample::from_series(series.middleRows(t - 1, W_prime + 1));
    const std::vector<GridFit> fits = sweep_grid(train, prototype, grid, 1);
    FoldErrors fe;
    fe.err.resize(fits.size());
    for (size_t i = 0; i < fits.size(); ++i)
      fe.err[i] = (validate.Y - validate.X * fits[i].fit.total()).squaredNorm();
    per_fold[f] = std::move(fe);
  });

  const size_t points = per_fold.empty() ? 0 : per_fold[0].err.size();
  ForwardCvResult result;
  result.table.resize(points);
  std::vector<double> mean(points, 0.0);
  for (const auto& fe : per_fold)
    for (size_t i = 0; i < points; ++i) mean[i] += fe.err[i] / folds;

  // Coordinates in the same descending sweep order used by sweep_grid.
  std::vector<std::array<double, 3>> coords;
  {
    auto rev = [](std::vector<double> v) {
      std::reverse(v.begin(), v.end());
      return v;
    };
    const auto lam = rev(grid.lambda_values);
    const auto mu = rev(grid.mu_values);
    const auto nu = rev(grid.nu_values);
    for (double l : lam)
      for (double m2 : mu)
        for (double n2 : nu) coords.push_back({l, m2, n2});
  }
  size_t best = 0;
  for (size_t i = 0; i < points; ++i) {
    result.table[i] = {coords[i][0], coords[i][1], coords[i][2], mean[i], folds};
    if (mean[i] < mean[best]) best = i;
  }
  result.lambda = coords[best][0];
  result.mu = coords[best][1];
  result.nu = coords[best][2];
  return result;
}

OracleSelection oracle_select(const StructuredTransition& truth, const std::vector<GridFit>& fits) {
  if (fits.empty()) throw ParameterError("oracle_select: no fits");
  const Matrix B_true = truth.total();
  const double norm_true = B_true.norm();
  const bool has_L = truth.rank() > 0;
  const bool has_G = truth.group_count() > 0;
  const int r_true = truth.rank();
  const int g_true = truth.group_count();

  auto ee_of = [&](const CompositeFit& fit) {
    return (fit.total() - B_true).norm() / norm_true;
  };
  auto matches = [&](const CompositeFit& fit) {
    if (has_L && numeric_rank(fit.L_last) != r_true) return false;
    if (has_G) {
      StructuredTransition probe = StructuredTransition::zero(truth.p);
      probe.partition = truth.partition;
      probe.G = fit.G_last;
      if (probe.group_count() != g_true) return false;
    }
    return true;
  };

  OracleSelection best_match{0, false, std::numeric_limits<double>::infinity()};
  OracleSelection best_any{0, false, std::numeric_limits<double>::infinity()};
  for (size_t i = 0; i < fits.size(); ++i) {
    const double ee = ee_of(fits[i].fit);
    if (ee < best_any.ee) best_any = {i, false, ee};
    if (matches(fits[i].fit) && ee < best_match.ee) best_match = {i, true, ee};
  }
  return best_match.structure_matched ? best_match : best_any;
}

}  // namespace lsvar
