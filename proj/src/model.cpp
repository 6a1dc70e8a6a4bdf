#include "lsvar/model.hpp"

#include <cmath>
#include <random>

#include "lsvar/rng.hpp"
#include "lsvar/stability.hpp"

namespace lsvar {

Matrix generate_sparse_topology(int p, double edge_prob, uint64_t seed) {
  if (p <= 0) throw ParameterError("generate_sparse_topology: dimension must be positive");
  if (!(edge_prob > 0.0) || edge_prob > 1.0)
    throw ParameterError("generate_sparse_topology: edge probability must be in (0, 1], got " +
                         std::to_string(edge_prob));
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix S = Matrix::Zero(p, p);
  for (Index j = 0; j < p; ++j)
    for (Index i = 0; i < p; ++i)
      if (unif(rng) < edge_prob) S(i, j) = normal(rng);
  return S;
}

Matrix generate_low_rank(int p, int r, uint64_t seed) {
  if (p <= 0) throw ParameterError("generate_low_rank: dimension must be positive");
  if (r < 1 || r > p)
    throw ParameterError("generate_low_rank: rank must be in [1, p], got " + std::to_string(r));
  auto rng = make_rng(seed);
  const Matrix left = gaussian_matrix(p, r, rng);
  const Matrix right = gaussian_matrix(r, p, rng);
  return left * right;
}

Matrix rescale_to_spectral_radius(const Matrix& B, double rho_target) {
  if (!(rho_target > 0.0) || rho_target >= 1.0)
    throw ParameterError("rescale_to_spectral_radius: target must be in (0, 1)");
  const double rho = spectral_radius(B);
  if (rho <= 0.0)
    throw NumericError("rescale_to_spectral_radius: spectral radius is zero, cannot rescale");
  return (rho_target / rho) * B;
}

StructuredTransition generate_structured(const StructureSpec& spec, uint64_t seed) {
  if (spec.p <= 0) throw ParameterError("generate_structured: dimension must be positive");
  if (spec.rank < 0 || spec.rank > spec.p)
    throw ParameterError("generate_structured: rank must be in [0, p]");
  if (spec.hub_groups < 0 || spec.hub_groups > spec.p)
    throw ParameterError("generate_structured: hub group count must be in [0, p]");
  if (spec.rank == 0 && spec.edge_prob == 0.0 && spec.hub_groups == 0)
    throw ParameterError("generate_structured: at least one component must be active");
  if (spec.hub_groups > 0 && spec.singleton_groups)
    throw ParameterError("generate_structured: hub groups require the column scheme");

  const int p = spec.p;
  const int max_attempts = 100;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const uint64_t draw_seed = mix_seed(seed, attempt);
    StructuredTransition T = StructuredTransition::zero(p);
    if (spec.singleton_groups) T.partition = GroupPartition::singletons(p);

    if (spec.rank > 0) T.L = generate_low_rank(p, spec.rank, mix_seed(draw_seed, 1));
    if (spec.edge_prob > 0.0)
      T.S = generate_sparse_topology(p, spec.edge_prob, mix_seed(draw_seed, 2));
    std::vector<int> hubs;
    if (spec.hub_groups > 0) {
      auto rng = make_rng(mix_seed(draw_seed, 3));
      std::vector<int> cols(p);
      for (int c = 0; c < p; ++c) cols[c] = c;
      std::shuffle(cols.begin(), cols.end(), rng);
      hubs.assign(cols.begin(), cols.begin() + spec.hub_groups);
      for (int c : hubs) T.G.col(c) = gaussian_matrix(p, 1, rng);
      // Keep the sparse support disjoint from the hub columns.
      for (int c : hubs) T.S.col(c).setZero();
    }

    // Reject degenerate draws: the sparse part must not be rank r or less,
    // and an empty sparse draw is useless.
    if (spec.edge_prob > 0.0) {
      if (T.sparse_count() == 0) continue;
      if (spec.rank > 0 && numeric_rank(T.S) <= spec.rank) continue;
    }
    if (spec.hub_groups > 0 && T.group_count() != spec.hub_groups) continue;

    const Matrix B = T.total();
    const double rho = spectral_radius(B);
    if (rho <= 0.0) continue;
    const double c = spec.rho / rho;
    T.L *= c;
    T.S *= c;
    T.G *= c;
    return T;
  }
  throw NumericError("generate_structured: no non-degenerate draw in " +
                     std::to_string(max_attempts) + " attempts");
}

VarSample simulate_var(const StructuredTransition& B, int N, double sigma_eps, int burn_in,
                       uint64_t seed) {
  if (N < 1) throw ParameterError("simulate_var: need at least one sample");
  if (burn_in < 0) throw ParameterError("simulate_var: burn-in must be nonnegative");
  if (!(sigma_eps >= 0.0)) throw ParameterError("simulate_var: sigma must be nonnegative");
  const Matrix Bmat = B.total();
  const double rho = spectral_radius(Bmat);
  if (rho >= 1.0)
    throw StabilityError("simulate_var: unstable transition, spectral radius " +
                         std::to_string(rho));

  const int p = B.p;
  auto rng = make_rng(seed);
  const Matrix Bt = Bmat.transpose();
  Vector state = Vector::Zero(p);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw_noise = [&](Vector& eps) {
    for (int i = 0; i < p; ++i) eps(i) = sigma_eps * normal(rng);
  };

  Vector eps(p);
  for (int t = 0; t < burn_in; ++t) {
    draw_noise(eps);
    state = Bt * state + eps;
  }

  Matrix series(N + 1, p);
  series.row(0) = state.transpose();
  for (int t = 1; t <= N; ++t) {
    draw_noise(eps);
    state = Bt * state + eps;
    series.row(t) = state.transpose();
  }

  VarSample sample = VarSample::from_series(series);
  sample.sigma_eps = sigma_eps;
  // Recompute the innovations from the stacked design so that Y - X B == E
  // holds bit-level, not just up to the rounding of the forward recurrence.
  sample.E = sample.Y - sample.X * Bmat;
  return sample;
}

}  // namespace lsvar
