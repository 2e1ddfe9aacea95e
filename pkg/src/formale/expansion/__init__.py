"""
Formal expansions of w(z), x(z), y(z) and the invariant differential.
"""
from .formal import (
    ExpansionBundle,
    expand,
    formal_coordinates,
    formal_point_residual,
    invariant_differential,
    omega_closed_family1,
    omega_inv_sqrt_family1,
    omega_from_coordinates,
    omega_from_trinomials,
    verify_point_on_curve,
    w_series_closed_family1,
    w_series_recurrence,
)
