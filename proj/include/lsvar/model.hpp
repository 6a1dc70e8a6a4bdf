#pragma once

#include <cstdint>

#include "lsvar/types.hpp"

namespace lsvar {

/// Directed Erdos-Renyi topology: each entry is nonzero independently with
/// probability edge_prob, weights i.i.d. standard Gaussian.
Matrix generate_sparse_topology(int p, double edge_prob, uint64_t seed);

/// Product of p x r and r x p standard Gaussian factors; numerical rank is
/// exactly r.
Matrix generate_low_rank(int p, int r, uint64_t seed);

/// Returns (rho_target / rho(B)) * B. Throws NumericError when the spectral
/// radius is zero (zero or nilpotent input cannot be rescaled).
Matrix rescale_to_spectral_radius(const Matrix& B, double rho_target);

/// Options for assembling a structured transition for the synthetic
/// experiments. rank == 0, edge_prob == 0, hub_groups == 0 switch the
/// respective component off.
struct StructureSpec {
  int p = 50;
  int rank = 0;            // rank of L
  double edge_prob = 0.0;  // nonzero probability for S entries
  int hub_groups = 0;      // nonzero column groups in G
  double rho = 0.7;        // target spectral radius of L + S + G
  bool singleton_groups = false;
};

/// Draws components, enforces mutual non-degeneracy (S must not be low-rank,
/// L must not be sparse), zeroes the S entries of the hub columns, and
/// rescales the sum to the target spectral radius. Retries up to 100 draws.
StructuredTransition generate_structured(const StructureSpec& spec, uint64_t seed);

/// Simulates N+1 consecutive states of X^t = B' X^(t-1) + eps^t after the
/// burn-in, starting from zero, with eps ~ N(0, sigma_eps^2 I), and stacks
/// them into the regression design. Throws StabilityError when rho(B) >= 1.
VarSample simulate_var(const StructuredTransition& B, int N, double sigma_eps, int burn_in,
                       uint64_t seed);

inline VarSample simulate_var(const StructuredTransition& B, int N, uint64_t seed) {
  return simulate_var(B, N, 1.0, 500, seed);
}

}  // namespace lsvar
