"""Smoke tests of the python bindings."""

import numpy as np
import pytest

import lsvar


def test_prox_kernels():
    M = np.array([[1.5, -0.4], [0.0, 2.0]])
    out = lsvar.soft_threshold(M, 1.0)
    assert out[0, 0] == pytest.approx(0.5)
    assert out[0, 1] == 0.0

    U, s, V = lsvar.svd(np.diag([3.0, 1.0]))
    assert s[0] == pytest.approx(3.0)
    shrunk, rank = lsvar.svt(np.diag([3.0, 1.0]), 2.0)
    assert rank == 1
    assert shrunk[0, 0] == pytest.approx(1.0)

    part = lsvar.GroupPartition.columns(2)
    g = lsvar.group_soft_threshold(np.array([[3.0, 0.0], [4.0, 0.0]]), part, 2.5)
    assert g[0, 0] == pytest.approx(1.5)


def test_simulation_and_diagnostics():
    truth = lsvar.generate_structured(p=20, rank=2, sparsity=0.05, rho=0.7, seed=5)
    B = truth.total()
    assert lsvar.spectral_radius(B) == pytest.approx(0.7, abs=1e-5)
    assert truth.rank() == 2

    report = lsvar.diagnose(truth, sigma_eps=1.0, grid=128)
    assert report.stable
    assert report.mu_max <= report.lemma1_bound + 1e-9

    sample = lsvar.simulate_var(truth, N=150, sigma_eps=1.0, burn_in=300, seed=6)
    assert sample.Y.shape == (150, 20)
    # numpy's matmul rounds differently than the C++ route, so float-level only.
    resid = sample.Y - sample.X @ B
    assert np.abs(resid - sample.E).max() < 1e-12


def test_estimation_roundtrip():
    truth = lsvar.generate_structured(p=15, rank=1, sparsity=0.08, rho=0.6, seed=9)
    sample = lsvar.simulate_var(truth, N=300, seed=10)

    XtE = sample.X.T @ sample.E
    fit = lsvar.afnsl_solve(
        sample.X, sample.Y, "l+s",
        lambda_N=2.0 * np.linalg.svd(XtE, compute_uv=False)[0],
        mu_N=2.0 * np.abs(XtE).max(),
    )
    tpr, far, ee = lsvar.metrics(truth.total(), fit.total())
    assert ee < 1.0
    assert fit.trace.converged
    nnz = int((np.abs(fit.S_last) > 0).sum())
    assert 0 < nnz < 15 * 15  # shrinkage produced a genuinely sparse support

    B_ols = lsvar.ols_solve(sample.X, sample.Y)
    _, _, ee_ols = lsvar.metrics(truth.total(), B_ols)
    assert np.isfinite(ee_ols)

    B_sparse, trace = lsvar.fnsl_solve(
        sample.X, sample.Y, "l1", 0.1 * np.abs(sample.X.T @ sample.Y).max()
    )
    assert trace.total_ax >= 2 * len(trace.objectives)
    assert np.all(np.isfinite(trace.objectives))


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        lsvar.generate_sparse_topology(10, 1.5, 1)
    with pytest.raises(ValueError):
        lsvar.metrics(np.zeros((3, 3)), np.zeros((3, 3)))
    with pytest.raises(ValueError):
        lsvar.spectral_radius(np.full((3, 4), 1.0))
    with pytest.raises(RuntimeError):
        lsvar.ols_solve(np.ones((3, 5)), np.ones((3, 5)))
