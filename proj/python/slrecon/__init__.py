"""Conservative sliding-average reconstruction and semi-Lagrangian solvers."""

from ._slrecon import (
    alpha_coeff,
    beta_coeff,
    bdf_coeffs,
    broadwell_step,
    conservation_sweep,
    decompose_shift,
    dirk2_table,
    dirk43_table,
    ghost_extend,
    lax_friedrichs_step,
    q_shifted,
    q_shifted_2d,
    relaxation_limit_step,
    stage_solve_hfg,
    xinjin_step,
)

__all__ = [
    "alpha_coeff",
    "beta_coeff",
    "bdf_coeffs",
    "broadwell_step",
    "conservation_sweep",
    "decompose_shift",
    "dirk2_table",
    "dirk43_table",
    "ghost_extend",
    "lax_friedrichs_step",
    "q_shifted",
    "q_shifted_2d",
    "relaxation_limit_step",
    "stage_solve_hfg",
    "xinjin_step",
]
