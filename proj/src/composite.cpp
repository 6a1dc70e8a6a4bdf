#include "lsvar/composite.hpp"

#include <cmath>

namespace lsvar {

CompositeConfig CompositeConfig::for_model(const std::string& model, int p) {
  CompositeConfig c;
  c.partition = GroupPartition::columns(p);
  if (model == "sparse") {
    c.with_sparse = true;
  } else if (model == "group") {
    c.with_group = true;
  } else if (model == "lowrank") {
    c.with_low_rank = true;
  } else if (model == "l+s") {
    c.with_low_rank = c.with_sparse = true;
    c.alpha = p / 2.0;
  } else if (model == "l+g") {
    c.with_low_rank = c.with_group = true;
    c.beta = std::sqrt(static_cast<double>(p));
  } else if (model == "s+g") {
    c.with_sparse = c.with_group = true;
    c.gamma = p / 2.0;
  } else if (model == "l+s+g") {
    c.with_low_rank = c.with_sparse = c.with_group = true;
    c.alpha = p / 2.0;
    c.beta = std::sqrt(static_cast<double>(p));
  } else {
    throw ParameterError("unknown model '" + model + "'");
  }
  return c;
}

void CompositeConfig::validate(int p) const {
  if (!with_low_rank && !with_sparse && !with_group)
    throw ParameterError("CompositeConfig: at least one component must be active");
  if (!(lambda_N >= 0.0) || !(mu_N >= 0.0) || !(nu_N >= 0.0))
    throw ParameterError("CompositeConfig: penalty weights must be nonnegative");
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !(gamma >= 0.0))
    throw ParameterError("CompositeConfig: box numerators must be nonnegative");
  if ((with_group || beta > 0.0) && partition.p != p)
    throw ParameterError("CompositeConfig: partition dimension does not match the sample");
}

double composite_objective(const Matrix& L, const Matrix& S, const Matrix& G,
                           const VarSample& sample, const CompositeConfig& config) {
  const int p = sample.p();
  auto shaped = [&](const Matrix& M) { return M.rows() == p && M.cols() == p; };
  if (!shaped(L) || !shaped(S) || !shaped(G))
    throw ParameterError("composite_objective: component shape mismatch");
  double obj = 0.5 * (sample.Y - sample.X * (L + S + G)).squaredNorm();
  if (config.with_low_rank) obj += config.lambda_N * nuclear_norm(L);
  if (config.with_sparse) obj += config.mu_N * l1_norm(S);
  if (config.with_group) obj += config.nu_N * group_l21_norm(G, config.partition);
  return obj;
}

CompositeFit afnsl_solve(const VarSample& sample, const CompositeConfig& config,
                         const CompositeFit* warm_start) {
  const int p = sample.p();
  config.validate(p);
  config.solver.validate();
  const Matrix& X = sample.X;
  const Matrix& Y = sample.Y;
  const SolverConfig& knobs = config.solver;

  const double box_L = config.alpha > 0 ? config.alpha / p : 0.0;
  const double group_box_L =
      config.beta > 0 ? config.beta / std::sqrt(static_cast<double>(config.partition.K())) : 0.0;
  const double box_G = config.gamma > 0 ? config.gamma / p : 0.0;

  long ax = 0;
  const double xnorm2 = design_operator_norm(X);
  const double eta_min = knobs.eta_min > 0 ? knobs.eta_min : std::max(xnorm2 / 10.0, 1e-12);
  const double eta0_first = knobs.eta0_initial > 0 ? knobs.eta0_initial : eta_min;

  const Matrix zero = Matrix::Zero(p, p);
  Matrix L = zero, S = zero, G = zero;
  Matrix XB = Matrix::Zero(X.rows(), p);  // X (L + S + G)
  if (warm_start) {
    if (config.with_low_rank && warm_start->L_last.size() > 0) L = warm_start->L_last;
    if (config.with_sparse && warm_start->S_last.size() > 0) S = warm_start->S_last;
    if (config.with_group && warm_start->G_last.size() > 0) G = warm_start->G_last;
    XB = X * (L + S + G);
    ++ax;
  }
  Matrix L_prev = L, S_prev = S, G_prev = G;
  Matrix L_ag = L, S_ag = S, G_ag = G;
  Matrix XB_prev = XB, XB_ag = XB;

  double Q = 0.0;
  double alpha_prev = 1.0;
  double eta_prev = eta0_first;
  SolveTrace trace;
  trace.iterations.reserve(std::min(knobs.max_iter, 4096));

  auto objective_at = [&](const Matrix& Lm, const Matrix& Sm, const Matrix& Gm,
                          const Matrix& XBm) {
    double obj = 0.5 * (Y - XBm).squaredNorm();
    if (config.with_low_rank) obj += config.lambda_N * nuclear_norm(Lm);
    if (config.with_sparse) obj += config.mu_N * l1_norm(Sm);
    if (config.with_group) obj += config.nu_N * group_l21_norm(Gm, config.partition);
    return obj;
  };

  for (int i = 1; i <= knobs.max_iter; ++i) {
    double eta0;
    if (i == 1) {
      eta0 = eta0_first;
    } else {
      // Trial step from the combined update direction (cached X products).
      const double dsq = ((L + S + G) - (L_prev + S_prev + G_prev)).squaredNorm();
      eta0 = dsq == 0.0 ? eta_min : std::max(eta_min, (XB - XB_prev).squaredNorm() / dsq);
    }

    double alpha = 1.0, eta = eta0, Gamma = 0.0, Q_next = 0.0;
    Matrix L_next, S_next, G_next, XB_next;
    int line_searches = 0;
    const double beta_i = knobs.beta(i);
    for (;;) {
      alpha = i == 1 ? 1.0 : solve_alpha(alpha_prev, eta_prev, eta0);
      eta = alpha * eta0;
      const Matrix XB_md = (1.0 - alpha) * XB_ag + alpha * XB;
      const Matrix grad = X.transpose() * (XB_md - Y);
      ++ax;
      const Matrix step = grad / eta;

      L_next = config.with_low_rank ? svt(L - step, config.lambda_N / eta).matrix : zero;
      if (config.with_low_rank && box_L > 0) L_next = project_box(L_next, box_L);
      if (config.with_low_rank && group_box_L > 0)
        L_next = project_group_box(L_next, config.partition, group_box_L);

      S_next = config.with_sparse ? soft_threshold(S - step, config.mu_N / eta) : zero;

      G_next = config.with_group
                   ? group_soft_threshold(G - step, config.partition, config.nu_N / eta)
                   : zero;
      if (config.with_group && box_G > 0) G_next = project_box(G_next, box_G);

      XB_next = X * (L_next + S_next + G_next);
      ++ax;
      const double diff_norm2 = ((L_next + S_next + G_next) - (L + S + G)).squaredNorm();
      Gamma = diff_norm2 - (alpha / eta) * (XB_next - XB).squaredNorm();
      Q_next = beta_i * Q + Gamma;
      if (Q_next >= -knobs.C / (static_cast<double>(i) * i)) break;
      eta0 *= knobs.sigma;
      ++line_searches;
    }

    L_prev.swap(L);
    S_prev.swap(S);
    G_prev.swap(G);
    XB_prev.swap(XB);
    L = std::move(L_next);
    S = std::move(S_next);
    G = std::move(G_next);
    XB = std::move(XB_next);
    L_ag = (1.0 - alpha) * L_ag + alpha * L;
    S_ag = (1.0 - alpha) * S_ag + alpha * S;
    G_ag = (1.0 - alpha) * G_ag + alpha * G;
    XB_ag = (1.0 - alpha) * XB_ag + alpha * XB;
    Q = Q_next;
    alpha_prev = alpha;
    eta_prev = eta;

    const double objective = objective_at(L, S, G, XB);
    const double objective_ag = objective_at(L_ag, S_ag, G_ag, XB_ag);
    if (!std::isfinite(objective) || !std::isfinite(objective_ag)) {
      trace.B_last = L + S + G;
      trace.B_ag = L_ag + S_ag + G_ag;
      trace.total_ax = ax;
      throw DivergenceError("afnsl_solve: objective diverged at iteration " + std::to_string(i),
                            std::move(trace));
    }
    trace.total_line_searches += line_searches;
    trace.iterations.push_back(
        {i, objective, objective_ag, eta, alpha, Q, Gamma, line_searches, ax});

    const size_t n = trace.iterations.size();
    if (n >= 6) {
      const double prev = trace.iterations[n - 6].objective;
      if (std::abs(prev - objective) <= knobs.tol * (1.0 + std::abs(objective))) {
        trace.converged = true;
        break;
      }
    }
  }

  trace.B_last = L + S + G;
  trace.B_ag = L_ag + S_ag + G_ag;
  trace.total_ax = ax;

  CompositeFit fit;
  fit.L = std::move(L_ag);
  fit.S = std::move(S_ag);
  fit.G = std::move(G_ag);
  fit.L_last = std::move(L);
  fit.S_last = std::move(S);
  fit.G_last = std::move(G);
  fit.trace = std::move(trace);
  return fit;
}

Matrix ols_solve(const VarSample& sample) {
  const Matrix& X = sample.X;
  if (X.rows() < X.cols())
    throw SingularityError("ols_solve: fewer samples than series, X'X is singular");
  const Matrix gram = X.transpose() * X;
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw SingularityError("ols_solve: X'X is not positive definite");
  return llt.solve(X.transpose() * sample.Y);
}

}  // namespace lsvar
