#include "lsvar/solver.hpp"

#include <cmath>

#include "lsvar/rng.hpp"

namespace lsvar {

double Penalty::value(const Matrix& B) const {
  switch (kind) {
    case PenaltyKind::l1:
      return lambda * l1_norm(B);
    case PenaltyKind::group_l1:
      return lambda * group_l21_norm(B, *partition);
    case PenaltyKind::nuclear:
      return lambda * nuclear_norm(B);
  }
  return 0.0;
}

Matrix Penalty::prox(const Matrix& Z, double threshold) const {
  switch (kind) {
    case PenaltyKind::l1:
      return soft_threshold(Z, threshold);
    case PenaltyKind::group_l1:
      return group_soft_threshold(Z, *partition, threshold);
    case PenaltyKind::nuclear:
      return svt(Z, threshold).matrix;
  }
  return Z;
}

void SolverConfig::validate() const {
  if (!(C >= 0.0)) throw ParameterError("SolverConfig: C must be nonnegative");
  if (!(sigma > 1.0)) throw ParameterError("SolverConfig: sigma must exceed 1");
  if (max_iter < 1) throw ParameterError("SolverConfig: max_iter must be positive");
  if (!(tol >= 0.0)) throw ParameterError("SolverConfig: tol must be nonnegative");
  if (!(penalty.lambda >= 0.0)) throw ParameterError("SolverConfig: penalty weight must be >= 0");
  if (penalty.kind == PenaltyKind::group_l1 && !penalty.partition)
    throw ParameterError("SolverConfig: group penalty needs a partition");
}

double SolverConfig::beta(int i) const {
  double b = beta_schedule ? beta_schedule(i) : 1.0 / i;
  const double hi = (1.0 - 1.0 / i) * (1.0 - 1.0 / i);
  return std::clamp(b, 0.0, hi);
}

double bb_stepsize(const Matrix& B_i, const Matrix& B_prev, const Matrix& X, double eta_min) {
  const Matrix D = B_i - B_prev;
  const double denom = D.squaredNorm();
  if (denom == 0.0) return eta_min;
  return std::max(eta_min, (X * D).squaredNorm() / denom);
}

double solve_alpha(double alpha_prev, double eta_prev, double eta0_i) {
  if (!(alpha_prev > 0.0) || !(eta_prev > 0.0) || !(eta0_i > 0.0))
    throw ParameterError("solve_alpha: arguments must be positive");
  const double d = alpha_prev * eta_prev;
  // eta0 a^2 + d a - d = 0; the discriminant d^2 + 4 eta0 d is positive.
  const double disc = std::sqrt(d * d + 4.0 * eta0_i * d);
  return (disc - d) / (2.0 * eta0_i);
}

double design_operator_norm(const Matrix& X) {
  if (X.size() == 0) return 0.0;
  auto rng = make_rng(0x9e3779b9U);
  Vector v = gaussian_matrix(static_cast<int>(X.cols()), 1, rng);
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 10000; ++it) {
    Vector w = X.transpose() * (X * v);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    w /= norm;
    const double next = (X * w).squaredNorm();
    if (std::abs(next - lambda) <= 1e-9 * std::max(next, 1e-300) && it > 8) return next;
    lambda = next;
    v.swap(w);
  }
  return lambda;
}

double penalized_objective(const VarSample& sample, const Matrix& B, const Penalty& penalty) {
  return 0.5 * (sample.Y - sample.X * B).squaredNorm() + penalty.value(B);
}

FnslResult fnsl_solve(const VarSample& sample, const SolverConfig& config) {
  config.validate();
  const Matrix& X = sample.X;
  const Matrix& Y = sample.Y;
  const int p = sample.p();
  if (config.penalty.kind == PenaltyKind::group_l1 && config.penalty.partition->p != p)
    throw ParameterError("fnsl_solve: partition dimension does not match the sample");

  long ax = 0;
  const double xnorm2 = design_operator_norm(X);  // power iteration, no AX charge
  const double eta_min = config.eta_min > 0 ? config.eta_min : std::max(xnorm2 / 10.0, 1e-12);
  const double eta0_first = config.eta0_initial > 0 ? config.eta0_initial : eta_min;

  Matrix B = Matrix::Zero(p, p);        // B_i, starts at zero
  Matrix B_prev = B;
  Matrix B_ag = B;
  Matrix XB = Matrix::Zero(X.rows(), p);
  Matrix XB_prev = XB;
  Matrix XB_ag = XB;

  double Q = 0.0;
  double alpha_prev = 1.0;
  double eta_prev = eta0_first;
  SolveTrace trace;
  trace.iterations.reserve(std::min(config.max_iter, 4096));

  for (int i = 1; i <= config.max_iter; ++i) {
    double eta0;
    if (i == 1) {
      eta0 = eta0_first;
    } else {
      const Matrix D = B - B_prev;
      const double denom = D.squaredNorm();
      // The XD product is cached from the previous accept, so the BB value
      // costs no extra AX.
      eta0 = denom == 0.0 ? eta_min
                          : std::max(eta_min, (XB - XB_prev).squaredNorm() / denom);
    }

    double alpha = 1.0, eta = eta0, Gamma = 0.0, Q_next = 0.0;
    Matrix B_next, XB_next;
    int line_searches = 0;
    const double beta_i = config.beta(i);
    for (;;) {
      alpha = i == 1 ? 1.0 : solve_alpha(alpha_prev, eta_prev, eta0);
      eta = alpha * eta0;
      // grad H at B_md; X B_md comes from the cached products.
      const Matrix XB_md = (1.0 - alpha) * XB_ag + alpha * XB;
      const Matrix grad = X.transpose() * (XB_md - Y);
      ++ax;
      B_next = config.penalty.prox(B - grad / eta, config.penalty.lambda / eta);
      XB_next = X * B_next;
      ++ax;
      Gamma = (B_next - B).squaredNorm() - (alpha / eta) * (XB_next - XB).squaredNorm();
      Q_next = beta_i * Q + Gamma;
      if (Q_next >= -config.C / (static_cast<double>(i) * i)) break;
      eta0 *= config.sigma;
      ++line_searches;
    }

    B_prev.swap(B);
    XB_prev.swap(XB);
    B = std::move(B_next);
    XB = std::move(XB_next);
    B_ag = (1.0 - alpha) * B_ag + alpha * B;
    XB_ag = (1.0 - alpha) * XB_ag + alpha * XB;
    Q = Q_next;
    alpha_prev = alpha;
    eta_prev = eta;

    const double objective = 0.5 * (Y - XB).squaredNorm() + config.penalty.value(B);
    const double objective_ag =
        0.5 * (Y - XB_ag).squaredNorm() + config.penalty.value(B_ag);
    if (!std::isfinite(objective) || !std::isfinite(objective_ag)) {
      trace.B_last = B;
      trace.B_ag = B_ag;
      trace.total_ax = ax;
      throw DivergenceError("fnsl_solve: objective diverged at iteration " + std::to_string(i),
                            std::move(trace));
    }
    trace.total_line_searches += line_searches;
    trace.iterations.push_back(
        {i, objective, objective_ag, eta, alpha, Q, Gamma, line_searches, ax});

    const size_t n = trace.iterations.size();
    if (n >= 6) {
      const double prev = trace.iterations[n - 6].objective;
      if (std::abs(prev - objective) <= config.tol * (1.0 + std::abs(objective))) {
        trace.converged = true;
        break;
      }
    }
  }

  trace.B_last = B;
  trace.B_ag = B_ag;
  trace.total_ax = ax;
  return {B_ag, std::move(trace)};
}

}  // namespace lsvar
