#include <doctest.h>

#include "lsvar/composite.hpp"
#include "lsvar/model.hpp"
#include "lsvar/prox.hpp"
#include "test_support.hpp"

using namespace lsvar;
using namespace lsvar::testing;

namespace {

VarSample ls_sample(int p, int n, uint64_t seed, double rho = 0.7) {
  StructureSpec spec;
  spec.p = p;
  spec.rank = p / 25 + 1;
  spec.edge_prob = 0.05;
  spec.rho = rho;
  return simulate_var(generate_structured(spec, seed), n, 1.0, 300, mix_seed(seed, 1));
}

}  // namespace

TEST_SUITE_BEGIN("composite");

TEST_CASE("composite objective closed forms") {
  const VarSample s = ls_sample(10, 40, 1);
  const Matrix zero = Matrix::Zero(10, 10);
  CompositeConfig config;
  config.with_low_rank = config.with_sparse = true;
  config.lambda_N = 2.0;
  config.mu_N = 1.0;
  config.partition = GroupPartition::columns(10);

  CHECK(composite_objective(zero, zero, zero, s, config) ==
        doctest::Approx(0.5 * s.Y.squaredNorm()));

  // Only the sparse block active reduces to the single-penalty objective.
  const Matrix S = random_matrix(10, 10, 2);
  CompositeConfig sparse_only;
  sparse_only.with_sparse = true;
  sparse_only.mu_N = 1.0;
  sparse_only.partition = GroupPartition::columns(10);
  CHECK(composite_objective(zero, S, zero, s, sparse_only) ==
        doctest::Approx(0.5 * (s.Y - s.X * S).squaredNorm() + l1_norm(S)));

  // Nuclear term cross-checked against the eigendecomposition route.
  const Matrix L = random_matrix(10, 10, 3);
  const double nuc = svd_from_eigendecomposition(L).s.sum();
  CompositeConfig lr_only;
  lr_only.with_low_rank = true;
  lr_only.lambda_N = 2.0;
  lr_only.partition = GroupPartition::columns(10);
  CHECK(composite_objective(L, zero, zero, s, lr_only) ==
        doctest::Approx(0.5 * (s.Y - s.X * L).squaredNorm() + 2.0 * nuc).epsilon(1e-9));

  Matrix wrong(4, 4);
  CHECK_THROWS_AS(composite_objective(wrong, zero, zero, s, config), ParameterError);
}

TEST_CASE("weights above the zero-optimality thresholds give the zero solution") {
  const VarSample s = ls_sample(8, 50, 5);
  const Matrix XtY = s.X.transpose() * s.Y;
  CompositeConfig config;
  config.with_low_rank = config.with_sparse = true;
  config.lambda_N = svd(XtY).singular_values(0) * 1.0001;
  config.mu_N = XtY.cwiseAbs().maxCoeff() * 1.0001;
  config.partition = GroupPartition::columns(8);
  const CompositeFit fit = afnsl_solve(s, config);
  CHECK(fit.L.isZero(0.0));
  CHECK(fit.S.isZero(0.0));
}

TEST_CASE("single active block matches the single-penalty solver") {
  const VarSample s = ls_sample(10, 60, 9);
  const double mu = 0.1 * (s.X.transpose() * s.Y).cwiseAbs().maxCoeff();

  CompositeConfig config;
  config.with_sparse = true;
  config.mu_N = mu;
  config.partition = GroupPartition::columns(10);
  config.solver.tol = 1e-12;
  config.solver.max_iter = 3000;
  const CompositeFit composite = afnsl_solve(s, config);

  SolverConfig single;
  single.penalty = {PenaltyKind::l1, mu, std::nullopt};
  single.tol = 1e-12;
  single.max_iter = 3000;
  const FnslResult fnsl = fnsl_solve(s, single);

  const double f_composite = penalized_objective(s, composite.S_last, single.penalty);
  const double f_single = penalized_objective(s, fnsl.trace.B_last, single.penalty);
  CHECK(f_composite == doctest::Approx(f_single).epsilon(1e-8));
}

TEST_CASE("iterates respect the feasibility boxes") {
  const VarSample s = ls_sample(10, 60, 11);
  CompositeConfig config;
  config.with_low_rank = config.with_sparse = true;
  config.alpha = 2.0;  // ||L||_max <= 0.2
  config.beta = 1.0;   // ||L||_{2,max} <= 1/sqrt(10)
  config.lambda_N = 1.0;
  config.mu_N = 0.5;
  config.partition = GroupPartition::columns(10);
  for (int iters : {1, 2, 3, 7, 40}) {
    CompositeConfig capped = config;
    capped.solver.max_iter = iters;
    const CompositeFit fit = afnsl_solve(s, capped);
    CHECK(fit.L_last.cwiseAbs().maxCoeff() <= 0.2 + 1e-12);
    CHECK(fit.L.cwiseAbs().maxCoeff() <= 0.2 + 1e-12);  // convex hull stays feasible
    CHECK(group_l2_max(fit.L_last, config.partition) <= 1.0 / std::sqrt(10.0) + 1e-12);
  }
}

TEST_CASE("gamma box constrains the group block in the s+g variant") {
  const VarSample s = ls_sample(10, 60, 13);
  CompositeConfig config;
  config.with_sparse = config.with_group = true;
  config.mu_N = 0.5;
  config.nu_N = 0.5;
  config.gamma = 1.0;  // ||G||_max <= 0.1
  config.partition = GroupPartition::columns(10);
  config.solver.max_iter = 60;
  const CompositeFit fit = afnsl_solve(s, config);
  CHECK(fit.G_last.cwiseAbs().maxCoeff() <= 0.1 + 1e-12);
}

TEST_CASE("warm starts reach the same objective") {
  const VarSample s = ls_sample(10, 60, 17);
  CompositeConfig config;
  config.with_low_rank = config.with_sparse = true;
  config.alpha = 5.0;
  config.lambda_N = 3.0;
  config.mu_N = 0.8;
  config.partition = GroupPartition::columns(10);
  config.solver.tol = 1e-11;
  config.solver.max_iter = 4000;

  const CompositeFit cold = afnsl_solve(s, config);
  CompositeConfig near = config;
  near.mu_N = 1.0;
  const CompositeFit warm_source = afnsl_solve(s, near);
  const CompositeFit warm = afnsl_solve(s, config, &warm_source);

  const double f_cold = composite_objective(cold.L, cold.S, cold.G, s, config);
  const double f_warm = composite_objective(warm.L, warm.S, warm.G, s, config);
  // The box-constrained L update is SVT-then-project, not an exact prox, so
  // different paths settle on slightly different plateaus.
  CHECK(f_warm == doctest::Approx(f_cold).epsilon(1e-4));
}

TEST_CASE("ols closed forms and orthogonality") {
  // X = I: the estimate is Y itself.
  VarSample ident;
  ident.X = Matrix::Identity(6, 6);
  ident.Y = random_matrix(6, 6, 21);
  ident.E = Matrix(0, 6);
  CHECK((ols_solve(ident) - ident.Y).norm() < 1e-12);

  // Noiseless data recovers the transition.
  const Matrix B = 0.1 * random_matrix(5, 5, 22);
  VarSample clean;
  clean.X = random_matrix(40, 5, 23);
  clean.Y = clean.X * B;
  clean.E = Matrix(0, 5);
  CHECK((ols_solve(clean) - B).cwiseAbs().maxCoeff() < 1e-8);

  const VarSample s = ls_sample(8, 60, 25);
  const Matrix fit = ols_solve(s);
  const double resid = (s.X.transpose() * (s.Y - s.X * fit)).cwiseAbs().maxCoeff();
  CHECK(resid < 1e-6 * (s.X.transpose() * s.Y).cwiseAbs().maxCoeff());

  VarSample thin;
  thin.X = random_matrix(3, 5, 26);
  thin.Y = random_matrix(3, 5, 27);
  thin.E = Matrix(0, 5);
  CHECK_THROWS_AS(ols_solve(thin), SingularityError);
}

TEST_CASE("model presets define sensible defaults") {
  const CompositeConfig ls = CompositeConfig::for_model("l+s", 50);
  CHECK(ls.with_low_rank);
  CHECK(ls.with_sparse);
  CHECK(!ls.with_group);
  CHECK(ls.alpha == doctest::Approx(25.0));

  const CompositeConfig sg = CompositeConfig::for_model("s+g", 50);
  CHECK(sg.gamma == doctest::Approx(25.0));
  CHECK_THROWS_AS(CompositeConfig::for_model("nope", 10), ParameterError);
}

TEST_SUITE_END();
