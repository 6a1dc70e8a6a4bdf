"""Low-rank plus structured sparse VAR(1) estimation."""

from ._lsvar import (
    CompositeFit,
    GroupPartition,
    NumericError,
    ParameterError,
    SingularityError,
    SolveTrace,
    StabilityError,
    StabilityReport,
    StructuredTransition,
    VarSample,
    afnsl_solve,
    diagnose,
    fnsl_solve,
    generate_low_rank,
    generate_sparse_topology,
    generate_structured,
    group_soft_threshold,
    lemma1_bound,
    metrics,
    mu_extremes,
    ols_solve,
    prediction_error,
    project_box,
    project_group_box,
    rescale_to_spectral_radius,
    simulate_var,
    soft_threshold,
    spectral_radius,
    svd,
    svt,
)

__all__ = [
    "CompositeFit",
    "GroupPartition",
    "NumericError",
    "ParameterError",
    "SingularityError",
    "SolveTrace",
    "StabilityError",
    "StabilityReport",
    "StructuredTransition",
    "VarSample",
    "afnsl_solve",
    "diagnose",
    "fnsl_solve",
    "generate_low_rank",
    "generate_sparse_topology",
    "generate_structured",
    "group_soft_threshold",
    "lemma1_bound",
    "metrics",
    "mu_extremes",
    "ols_solve",
    "prediction_error",
    "project_box",
    "project_group_box",
    "rescale_to_spectral_radius",
    "simulate_var",
    "soft_threshold",
    "spectral_radius",
    "svd",
    "svt",
]

__version__ = "0.1.0"
