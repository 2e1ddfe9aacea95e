"""
Machine checks of the Atkin-Swinnerton-Dyer congruences, their corollaries
and the closed-form trace formulas.
"""
from .checker import (
    LEVEL11_CURVE,
    DifferentialCoefficients,
    b_at,
    check_cor1,
    check_cor33,
    check_cor34,
    check_remark11,
    check_sec4_trace,
    check_thm2,
    differential_coefficients,
    sec4_trace_sum,
    sweep_cor1,
    sweep_thm2,
)
from .report import (
    STATEMENTS,
    CongruenceReport,
    divides,
    failures,
    inconsistent_flags,
    sort_reports,
    summarize,
)
