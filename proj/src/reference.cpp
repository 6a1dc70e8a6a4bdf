#include "lsvar/reference.hpp"

#include <cmath>

namespace lsvar {

namespace {

bool window_converged(const std::vector<double>& objectives, double tol) {
  const size_t n = objectives.size();
  if (n < 6) return false;
  return std::abs(objectives[n - 6] - objectives[n - 1]) <=
         tol * (1.0 + std::abs(objectives[n - 1]));
}

}  // namespace

ReferenceResult ista_solve(const VarSample& sample, const Penalty& penalty, int max_iter,
                           double tol) {
  const Matrix& X = sample.X;
  const Matrix& Y = sample.Y;
  const int p = sample.p();
  const double lip = design_operator_norm(X);
  const double step = lip > 0 ? 1.0 / lip : 1.0;

  ReferenceResult res;
  Matrix B = Matrix::Zero(p, p);
  Matrix XB = Matrix::Zero(X.rows(), p);
  for (int i = 1; i <= max_iter; ++i) {
    const Matrix grad = X.transpose() * (XB - Y);
    ++res.ax_count;
    B = penalty.prox(B - step * grad, penalty.lambda * step);
    XB = X * B;
    ++res.ax_count;
    res.iterations = i;
    res.objectives.push_back(0.5 * (Y - XB).squaredNorm() + penalty.value(B));
    if (window_converged(res.objectives, tol)) {
      res.converged = true;
      break;
    }
  }
  res.B = std::move(B);
  res.objective = res.objectives.back();
  return res;
}

ReferenceResult fista_solve(const VarSample& sample, const Penalty& penalty, int max_iter,
                            double tol, double L0, double eta_up) {
  const Matrix& X = sample.X;
  const Matrix& Y = sample.Y;
  const int p = sample.p();
  if (L0 <= 0) L0 = std::max(design_operator_norm(X) / 10.0, 1e-12);

  ReferenceResult res;
  Matrix B = Matrix::Zero(p, p);
  Matrix XB = Matrix::Zero(X.rows(), p);
  Matrix Yk = B;    // extrapolated point
  Matrix XYk = XB;
  double t = 1.0;
  double lip = L0;

  for (int i = 1; i <= max_iter; ++i) {
    const Matrix grad = X.transpose() * (XYk - Y);
    ++res.ax_count;
    const double h_y = 0.5 * (Y - XYk).squaredNorm();

    Matrix B_next, XB_next;
    for (;;) {
      B_next = penalty.prox(Yk - grad / lip, penalty.lambda / lip);
      XB_next = X * B_next;
      ++res.ax_count;
      const Matrix D = B_next - Yk;
      const double h_next = 0.5 * (Y - XB_next).squaredNorm();
      const double quad = h_y + grad.cwiseProduct(D).sum() + 0.5 * lip * D.squaredNorm();
      if (h_next <= quad + 1e-12 * std::abs(quad)) break;
      lip *= eta_up;
    }

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double momentum = (t - 1.0) / t_next;
    Yk = B_next + momentum * (B_next - B);
    XYk = XB_next + momentum * (XB_next - XB);
    B = std::move(B_next);
    XB = std::move(XB_next);
    t = t_next;

    res.iterations = i;
    res.objectives.push_back(0.5 * (Y - XB).squaredNorm() + penalty.value(B));
    if (window_converged(res.objectives, tol)) {
      res.converged = true;
      break;
    }
  }
  res.B = std::move(B);
  res.objective = res.objectives.back();
  return res;
}

}  // namespace lsvar
