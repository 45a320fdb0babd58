"""Best weighted mean-square polynomial approximation of (A + B t)/(t^2 + lambda^2)^(s+1)."""

from ._core import (
    ConsistencyError,
    ConvergenceError,
    IllConditionedError,
    KernelParams,
    PoleSequence,
    RankDeficiencyError,
    WeightSpec,
    best_error_squared,
    chi,
    cross_integral,
    dzhrbashyan_residual,
    error_squared,
    error_squared_general,
    eval_phi,
    eval_R,
    eval_tau,
    extremal_poly,
    integrate_real_line,
    laguerre_identity_gap,
    ls_best_poly,
    mu_n,
    nu_table,
    partial_sum_R,
    remainder,
    residue_coefficients,
)


def error_table(A, B, lam, s, poles, n_list=None, rho0=1.0):
    """[(n, E_n)] using the first n poles for each n."""
    params = KernelParams(A, B, lam, s)
    seq = PoleSequence(list(poles))
    ns = n_list if n_list is not None else range(1, len(seq) + 1)
    return [(n, best_error_squared(params, WeightSpec(rho0, seq.prefix(n))) ** 0.5) for n in ns]


__all__ = [name for name in dir() if not name.startswith("_")]
