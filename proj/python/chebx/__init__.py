"""Exact Chebyshev polynomial kernel.

Generation, identity verification, real root isolation and rational root
classification for T_n, U_n and the shifted T*_n, all over exact integer
and rational arithmetic. Values cross into Python as unbounded ints and
fractions.Fraction.
"""

from chebx._core import (
    __version__,
    check_identity,
    closed_form_value,
    count_real_roots,
    cross_check,
    eval_poly,
    gen,
    is_squarefree,
    isolate_roots,
    j_power_period,
    monic_transform,
    rational_roots,
    run_identity_suite,
    value_at_one,
)

__all__ = [
    "__version__",
    "check_identity",
    "closed_form_value",
    "count_real_roots",
    "cross_check",
    "eval_poly",
    "gen",
    "is_squarefree",
    "isolate_roots",
    "j_power_period",
    "monic_transform",
    "rational_roots",
    "run_identity_suite",
    "value_at_one",
]
