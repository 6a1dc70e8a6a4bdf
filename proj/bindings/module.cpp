#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lsvar/composite.hpp"
#include "lsvar/eval.hpp"
#include "lsvar/io.hpp"
#include "lsvar/model.hpp"
#include "lsvar/prox.hpp"
#include "lsvar/reference.hpp"
#include "lsvar/rng.hpp"
#include "lsvar/solver.hpp"
#include "lsvar/stability.hpp"

namespace py = pybind11;
using namespace lsvar;

namespace {

VarSample sample_from_arrays(const Matrix& X, const Matrix& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw ParameterError("X and Y must have the same shape");
  VarSample s;
  s.X = X;
  s.Y = Y;
  s.E = Matrix(0, X.cols());
  return s;
}

Penalty make_penalty(const std::string& kind, double lambda, int p) {
  Penalty pen;
  pen.lambda = lambda;
  if (kind == "l1") {
    pen.kind = PenaltyKind::l1;
  } else if (kind == "group_l1") {
    pen.kind = PenaltyKind::group_l1;
    pen.partition = GroupPartition::columns(p);
  } else if (kind == "nuclear") {
    pen.kind = PenaltyKind::nuclear;
  } else {
    throw ParameterError("penalty must be l1, group_l1, or nuclear");
  }
  return pen;
}

}  // namespace

PYBIND11_MODULE(_lsvar, m) {
  m.doc() = "Low-rank plus structured sparse VAR(1) estimation";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<StabilityError>(m, "StabilityError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseErrorLsvar", PyExc_ValueError);
  py::register_exception<SingularityError>(m, "SingularityError", PyExc_RuntimeError);

  py::class_<GroupPartition>(m, "GroupPartition")
      .def_static("columns", &GroupPartition::columns, py::arg("p"))
      .def_static("singletons", &GroupPartition::singletons, py::arg("p"))
      .def_readonly("groups", &GroupPartition::groups)
      .def_property_readonly("K", &GroupPartition::K)
      .def_property_readonly("m", &GroupPartition::max_group_size)
      .def("validate", &GroupPartition::validate);

  py::class_<StructuredTransition>(m, "StructuredTransition")
      .def_readonly("p", &StructuredTransition::p)
      .def_readonly("L", &StructuredTransition::L)
      .def_readonly("S", &StructuredTransition::S)
      .def_readonly("G", &StructuredTransition::G)
      .def_readonly("partition", &StructuredTransition::partition)
      .def("total", &StructuredTransition::total)
      .def("rank", &StructuredTransition::rank, py::arg("rel_tol") = 1e-10)
      .def("sparse_count", &StructuredTransition::sparse_count, py::arg("zero_tol") = 0.0)
      .def("group_count", &StructuredTransition::group_count, py::arg("zero_tol") = 0.0)
      .def("to_json", [](const StructuredTransition& t) { return to_json(t); });

  py::class_<VarSample>(m, "VarSample")
      .def_static("from_series", &VarSample::from_series, py::arg("series"))
      .def_readonly("Y", &VarSample::Y)
      .def_readonly("X", &VarSample::X)
      .def_readonly("E", &VarSample::E)
      .def_readonly("sigma_eps", &VarSample::sigma_eps)
      .def_property_readonly("N", &VarSample::N)
      .def_property_readonly("p", &VarSample::p)
      .def("to_series", &VarSample::to_series);

  py::class_<StabilityReport>(m, "StabilityReport")
      .def_readonly("rho", &StabilityReport::rho)
      .def_readonly("stable", &StabilityReport::stable)
      .def_readonly("mu_max", &StabilityReport::mu_max)
      .def_readonly("mu_min", &StabilityReport::mu_min)
      .def_readonly("M_fx", &StabilityReport::M_fx)
      .def_readonly("m_fx", &StabilityReport::m_fx)
      .def_readonly("lemma1_bound", &StabilityReport::lemma1_bound)
      .def_readonly("zeta_lower", &StabilityReport::zeta_lower);

  py::class_<SolveTrace>(m, "SolveTrace")
      .def_property_readonly("objectives",
                             [](const SolveTrace& t) {
                               std::vector<double> v;
                               for (const auto& it : t.iterations) v.push_back(it.objective);
                               return v;
                             })
      .def_property_readonly("objectives_ag",
                             [](const SolveTrace& t) {
                               std::vector<double> v;
                               for (const auto& it : t.iterations) v.push_back(it.objective_ag);
                               return v;
                             })
      .def_readonly("total_ax", &SolveTrace::total_ax)
      .def_readonly("converged", &SolveTrace::converged)
      .def_readonly("B_last", &SolveTrace::B_last)
      .def_readonly("B_ag", &SolveTrace::B_ag);

  py::class_<CompositeFit>(m, "CompositeFit")
      .def_readonly("L", &CompositeFit::L)
      .def_readonly("S", &CompositeFit::S)
      .def_readonly("G", &CompositeFit::G)
      .def_readonly("L_last", &CompositeFit::L_last)
      .def_readonly("S_last", &CompositeFit::S_last)
      .def_readonly("G_last", &CompositeFit::G_last)
      .def_readonly("trace", &CompositeFit::trace)
      .def("total", &CompositeFit::total);

  // Generation and simulation.
  m.def("generate_sparse_topology", &generate_sparse_topology, py::arg("p"),
        py::arg("edge_prob"), py::arg("seed"));
  m.def("generate_low_rank", &generate_low_rank, py::arg("p"), py::arg("r"), py::arg("seed"));
  m.def("rescale_to_spectral_radius", &rescale_to_spectral_radius, py::arg("B"),
        py::arg("rho_target"));
  m.def(
      "generate_structured",
      [](int p, int rank, double sparsity, int hub_groups, double rho, uint64_t seed) {
        StructureSpec spec;
        spec.p = p;
        spec.rank = rank;
        spec.edge_prob = sparsity;
        spec.hub_groups = hub_groups;
        spec.rho = rho;
        return generate_structured(spec, seed);
      },
      py::arg("p"), py::arg("rank") = 0, py::arg("sparsity") = 0.0, py::arg("hub_groups") = 0,
      py::arg("rho") = 0.7, py::arg("seed") = 42);
  m.def(
      "simulate_var",
      [](const StructuredTransition& B, int N, double sigma_eps, int burn_in, uint64_t seed) {
        return simulate_var(B, N, sigma_eps, burn_in, seed);
      },
      py::arg("B"), py::arg("N"), py::arg("sigma_eps") = 1.0, py::arg("burn_in") = 500,
      py::arg("seed") = 42);

  // Proximal kernels.
  m.def("soft_threshold", &soft_threshold, py::arg("M"), py::arg("t"));
  m.def("group_soft_threshold", &group_soft_threshold, py::arg("M"), py::arg("partition"),
        py::arg("t"));
  m.def(
      "svd",
      [](const Matrix& M) {
        const SvdResult r = svd(M);
        return py::make_tuple(r.U, r.singular_values, r.V);
      },
      py::arg("M"));
  m.def(
      "svt",
      [](const Matrix& M, double tau) {
        const SvtResult r = svt(M, tau);
        return py::make_tuple(r.matrix, r.rank);
      },
      py::arg("M"), py::arg("tau"));
  m.def("project_box", &project_box, py::arg("M"), py::arg("bound"));
  m.def("project_group_box", &project_group_box, py::arg("M"), py::arg("partition"),
        py::arg("bound"));

  // Stability diagnostics.
  m.def("spectral_radius", &spectral_radius, py::arg("B"));
  m.def(
      "mu_extremes",
      [](const Matrix& B, int grid) {
        const MuExtremes mu = mu_extremes(B, grid);
        return py::make_tuple(mu.mu_min, mu.mu_max);
      },
      py::arg("B"), py::arg("grid") = 512);
  m.def("lemma1_bound", &lemma1_bound, py::arg("T"));
  m.def("diagnose", &diagnose, py::arg("T"), py::arg("sigma_eps") = 1.0, py::arg("grid") = 512);

  // Estimation.
  m.def(
      "fnsl_solve",
      [](const Matrix& X, const Matrix& Y, const std::string& penalty, double lam,
         double tol, int max_iter, double C) {
        VarSample s = sample_from_arrays(X, Y);
        SolverConfig config;
        config.penalty = make_penalty(penalty, lam, s.p());
        config.tol = tol;
        config.max_iter = max_iter;
        config.C = C;
        FnslResult r = fnsl_solve(s, config);
        return py::make_tuple(r.B, r.trace);
      },
      py::arg("X"), py::arg("Y"), py::arg("penalty"), py::arg("lam"), py::arg("tol") = 1e-8,
      py::arg("max_iter") = 2000, py::arg("C") = 100.0);
  m.def(
      "afnsl_solve",
      [](const Matrix& X, const Matrix& Y, const std::string& model, double lambda_N,
         double mu_N, double nu_N, double alpha, double beta, double gamma, double tol,
         int max_iter) {
        VarSample s = sample_from_arrays(X, Y);
        CompositeConfig config = CompositeConfig::for_model(model, s.p());
        config.lambda_N = lambda_N;
        config.mu_N = mu_N;
        config.nu_N = nu_N;
        if (alpha >= 0) config.alpha = alpha;
        if (beta >= 0) config.beta = beta;
        if (gamma >= 0) config.gamma = gamma;
        config.solver.tol = tol;
        config.solver.max_iter = max_iter;
        return afnsl_solve(s, config);
      },
      py::arg("X"), py::arg("Y"), py::arg("model"), py::arg("lambda_N") = 0.0,
      py::arg("mu_N") = 0.0, py::arg("nu_N") = 0.0, py::arg("alpha") = -1.0,
      py::arg("beta") = -1.0, py::arg("gamma") = -1.0, py::arg("tol") = 1e-8,
      py::arg("max_iter") = 2000);
  m.def(
      "ols_solve",
      [](const Matrix& X, const Matrix& Y) { return ols_solve(sample_from_arrays(X, Y)); },
      py::arg("X"), py::arg("Y"));

  // Metrics.
  m.def(
      "metrics",
      [](const Matrix& truth, const Matrix& estimate, double zero_tol) {
        const EvalMetrics em = metrics(truth, estimate, zero_tol);
        return py::make_tuple(em.tpr, em.far, em.ee);
      },
      py::arg("truth"), py::arg("estimate"), py::arg("zero_tol") = 1e-10);
  m.def(
      "prediction_error",
      [](const Matrix& B_hat, const Matrix& X, const Matrix& Y) {
        return prediction_error(B_hat, sample_from_arrays(X, Y));
      },
      py::arg("B_hat"), py::arg("X"), py::arg("Y"));
}
