#pragma once

#include "lsvar/types.hpp"

namespace lsvar {

/// Spectral diagnostics of the VAR characteristic polynomial
/// B(z) = I - B' z evaluated on the unit circle.
struct StabilityReport {
  double rho = 0;            // spectral radius of the transition matrix
  double mu_max = 0;         // max over |z|=1 of Lambda_max(B(z)^dag B(z))
  double mu_min = 0;         // min over |z|=1 of Lambda_min(B(z)^dag B(z))
  double M_fx = 0;           // max over theta of Lambda_max(f_X(theta))
  double m_fx = 0;           // min over theta of Lambda_min(f_X(theta))
  double lemma1_bound = 0;   // [1 + l + (v_in+v_out)/2]^2 upper bound on mu_max
  double zeta_lower = 0;     // Lambda_min(Sigma_eps) / (2 mu_max); curvature floor
  int theta_grid_size = 0;
  bool stable = false;       // rho < 1
};

/// Largest eigenvalue modulus, computed by repeated squaring with
/// renormalization. Relative accuracy 1e-6 on the matrices this library
/// handles; cross-checked against a dense eigensolver in the test suite.
double spectral_radius(const Matrix& B);

/// Extreme eigenvalues of B(z)^dag B(z) over a uniform grid of
/// theta in [-pi, pi]. Grid must have at least 64 points.
struct MuExtremes {
  double mu_min = 0;
  double mu_max = 0;
};
MuExtremes mu_extremes(const Matrix& B, int grid = 512);

/// [1 + l + (v_in + v_out)/2]^2 with l the largest singular value of L and
/// v_in/v_out the largest absolute column/row sums of R = S + G.
double lemma1_bound(const StructuredTransition& T);

/// Grid extremes of the spectral density eigenvalues together with the
/// closed-form sandwich bounds they must satisfy.
struct SpectralDensityExtremes {
  double m_fx = 0;
  double M_fx = 0;
  double lower_bound = 0;  // Lambda_min(Sigma_eps) / (2 pi mu_max)
  double upper_bound = 0;  // Lambda_max(Sigma_eps) / (2 pi mu_min)
};
SpectralDensityExtremes spectral_density_extremes(const Matrix& B, const Matrix& Sigma_eps,
                                                  int grid = 512);

/// Full diagnostic pass over a structured transition with Sigma_eps =
/// sigma_eps^2 I.
StabilityReport diagnose(const StructuredTransition& T, double sigma_eps = 1.0, int grid = 512);

}  // namespace lsvar
