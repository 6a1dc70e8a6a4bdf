#include "lsvar/stability.hpp"

#include <cmath>
#include <complex>

#include "lsvar/prox.hpp"

namespace lsvar {

namespace {

using ComplexMatrix = Eigen::MatrixXcd;

void check_grid(int grid) {
  if (grid < 64) throw ParameterError("theta grid must have at least 64 points");
}

/// Hermitian eigenvalue extremes of A^dag A for A = I - B' z.
std::pair<double, double> char_poly_extremes(const Matrix& Bt, double theta) {
  const int p = static_cast<int>(Bt.rows());
  const std::complex<double> z(std::cos(theta), std::sin(theta));
  ComplexMatrix A = ComplexMatrix::Identity(p, p) - Bt.cast<std::complex<double>>() * z;
  ComplexMatrix H = A.adjoint() * A;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(H, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace

double spectral_radius(const Matrix& B) {
  if (B.rows() != B.cols()) throw ParameterError("spectral_radius: matrix must be square");
  if (B.size() == 0) return 0.0;
  if (B.rows() == 1) return std::abs(B(0, 0));

  double norm = B.norm();
  if (norm == 0.0) return 0.0;
  Matrix M = B / norm;
  double log_scale = std::log(norm);   // B^(2^k) = exp(log_scale) * M, ||M||_F = 1
  double estimate = std::exp(log_scale);
  const int max_squarings = 64;
  for (int k = 1; k <= max_squarings; ++k) {
    Matrix sq = M * M;
    const double c = sq.norm();
    if (c == 0.0) return 0.0;  // nilpotent
    M = sq / c;
    log_scale = 2.0 * log_scale + std::log(c);
    const double next = std::exp(log_scale / std::ldexp(1.0, k));
    if (std::abs(next - estimate) <= 5e-9 * std::max(next, 1e-300)) return next;
    estimate = next;
  }
  return estimate;
}

MuExtremes mu_extremes(const Matrix& B, int grid) {
  if (B.rows() != B.cols()) throw ParameterError("mu_extremes: matrix must be square");
  check_grid(grid);
  const Matrix Bt = B.transpose();
  MuExtremes out;
  out.mu_min = std::numeric_limits<double>::infinity();
  out.mu_max = 0;
  for (int j = 0; j < grid; ++j) {
    const double theta = -M_PI + 2.0 * M_PI * j / grid;
    auto [lo, hi] = char_poly_extremes(Bt, theta);
    out.mu_min = std::min(out.mu_min, lo);
    out.mu_max = std::max(out.mu_max, hi);
  }
  return out;
}

double lemma1_bound(const StructuredTransition& T) {
  const double l = T.L.isZero(0) ? 0.0 : svd(T.L).singular_values(0);
  const Matrix R = T.S + T.G;
  double v_in = 0, v_out = 0;
  for (Index j = 0; j < R.cols(); ++j) v_in = std::max(v_in, R.col(j).cwiseAbs().sum());
  for (Index i = 0; i < R.rows(); ++i) v_out = std::max(v_out, R.row(i).cwiseAbs().sum());
  const double base = 1.0 + l + 0.5 * (v_in + v_out);
  return base * base;
}

SpectralDensityExtremes spectral_density_extremes(const Matrix& B, const Matrix& Sigma_eps,
                                                  int grid) {
  if (B.rows() != B.cols() || Sigma_eps.rows() != B.rows() || Sigma_eps.cols() != B.cols())
    throw ParameterError("spectral_density_extremes: shape mismatch");
  check_grid(grid);
  const double rho = spectral_radius(B);
  if (rho >= 1.0)
    throw StabilityError("spectral_density_extremes: unstable transition, spectral radius " +
                         std::to_string(rho));

  const int p = static_cast<int>(B.rows());
  const Matrix Bt = B.transpose();
  const ComplexMatrix Sigma_c = Sigma_eps.cast<std::complex<double>>();

  SpectralDensityExtremes out;
  out.m_fx = std::numeric_limits<double>::infinity();
  out.M_fx = 0;
  const double scale = 1.0 / (2.0 * M_PI);
  for (int j = 0; j < grid; ++j) {
    const double theta = -M_PI + 2.0 * M_PI * j / grid;
    const std::complex<double> z(std::cos(theta), std::sin(theta));
    ComplexMatrix A = ComplexMatrix::Identity(p, p) - Bt.cast<std::complex<double>>() * z;
    ComplexMatrix Ainv = A.partialPivLu().inverse();
    ComplexMatrix F = scale * (Ainv * Sigma_c * Ainv.adjoint());
    F = 0.5 * (F + F.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(F, Eigen::EigenvaluesOnly);
    out.m_fx = std::min(out.m_fx, eig.eigenvalues()(0));
    out.M_fx = std::max(out.M_fx, eig.eigenvalues()(p - 1));
  }

  MuExtremes mu = mu_extremes(B, grid);
  Eigen::SelfAdjointEigenSolver<Matrix> sig(Sigma_eps, Eigen::EigenvaluesOnly);
  out.lower_bound = scale * sig.eigenvalues()(0) / mu.mu_max;
  out.upper_bound = scale * sig.eigenvalues()(p - 1) / mu.mu_min;
  return out;
}

StabilityReport diagnose(const StructuredTransition& T, double sigma_eps, int grid) {
  StabilityReport rep;
  rep.theta_grid_size = grid;
  const Matrix B = T.total();
  rep.rho = spectral_radius(B);
  rep.stable = rep.rho < 1.0;
  MuExtremes mu = mu_extremes(B, grid);
  rep.mu_min = mu.mu_min;
  rep.mu_max = mu.mu_max;
  rep.lemma1_bound = lemma1_bound(T);
  const double sig2 = sigma_eps * sigma_eps;
  rep.zeta_lower = sig2 / (2.0 * rep.mu_max);
  if (rep.stable) {
    const Matrix Sigma = sig2 * Matrix::Identity(T.p, T.p);
    SpectralDensityExtremes fx = spectral_density_extremes(B, Sigma, grid);
    rep.m_fx = fx.m_fx;
    rep.M_fx = fx.M_fx;
  }
  return rep;
}

}  // namespace lsvar
