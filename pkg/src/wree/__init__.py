"""Relative entropy of entanglement for rank-2 two-qubit X states, with
independent numerical oracles and a monogamy audit of generalized W states."""

from .qmat import (
    DensityMatrix,
    EigenSystem,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidDensityMatrix,
    NotHermitian,
    WrongDimension,
    hermitian_eigensystem,
    is_ppt,
    partial_trace,
    partial_transpose,
    relative_entropy,
    von_neumann_entropy,
)
from .xfamily import (
    ClosedFormParts,
    DegenerateInput,
    NotInFamily,
    OutOfRange,
    UnsupportedCoherence,
    UxConjugateState,
    XState,
    closed_form_parts,
    from_density,
    ree_closed_form,
    ree_vedral_plenio,
    ux_conjugate_to_ux,
)
from .css_opt import (
    AngleParams,
    ConvergenceFailure,
    CssReport,
    GeneralOracleConfig,
    ProductMixtureAnsatz,
    SeparableCandidate,
    css_from_angles,
    epsilon_monotonicity_probe,
    g_objective,
    minimize_g,
    ree_numeric_general,
    ree_numeric_restricted,
    verify_css,
)
from .monogamy import (
    CkwCheck,
    MonogamyRecord,
    WParams,
    concurrence_ckw_check,
    delta,
    ree_a_bc,
    reduced_ab,
    reduced_ac,
    sweep,
    w_state_vector,
)
from .sampling import DEFAULT_SEED, random_interior_xstate, random_wparams

__version__ = "0.1.0"

__all__ = [
    "DensityMatrix",
    "EigenSystem",
    "DimensionMismatch",
    "IndexOutOfRange",
    "InvalidDensityMatrix",
    "NotHermitian",
    "WrongDimension",
    "hermitian_eigensystem",
    "is_ppt",
    "partial_trace",
    "partial_transpose",
    "relative_entropy",
    "von_neumann_entropy",
    "ClosedFormParts",
    "DegenerateInput",
    "NotInFamily",
    "OutOfRange",
    "UnsupportedCoherence",
    "UxConjugateState",
    "XState",
    "closed_form_parts",
    "from_density",
    "ree_closed_form",
    "ree_vedral_plenio",
    "ux_conjugate_to_ux",
    "AngleParams",
    "ConvergenceFailure",
    "CssReport",
    "GeneralOracleConfig",
    "ProductMixtureAnsatz",
    "SeparableCandidate",
    "css_from_angles",
    "epsilon_monotonicity_probe",
    "g_objective",
    "minimize_g",
    "ree_numeric_general",
    "ree_numeric_restricted",
    "verify_css",
    "CkwCheck",
    "MonogamyRecord",
    "WParams",
    "concurrence_ckw_check",
    "delta",
    "ree_a_bc",
    "reduced_ab",
    "reduced_ac",
    "sweep",
    "w_state_vector",
    "DEFAULT_SEED",
    "random_interior_xstate",
    "random_wparams",
]
