"""Quartic anharmonic oscillator energy levels from the self-consistent
nonlinear perturbation series, with a direct-diagonalization oracle."""

from ._core import (
    EnergySolution,
    Error,
    InputError,
    OracleResult,
    SchemeKind,
    SchemeSpec,
    SeriesEvaluation,
    SolveStatus,
    SplitChain,
    build_chain,
    convergence_table,
    cubic_positive_root,
    diag_element,
    diagonalize,
    energy,
    evaluate_series,
    offdiag2,
    offdiag4,
    oracle_energy,
    scheme,
    solve_base_frequency,
    solve_variational_W,
    table,
)

__all__ = [name for name in dir() if not name.startswith("_")]
