"""
L-series coefficients from Euler products and from the level 11 eta product.
"""
from .dirichlet import (
    DirichletCoefficients,
    Provenance,
    euler_coefficients,
    eta_product_level11,
    g_series,
    hasse_defects,
    prime_power_coefficients,
)
