"""
Exact truncated power series: univariate, bivariate and bounded-pole Laurent.
"""
from .bivariate import BivariateSeries, compose_bivariate
from .laurent import LaurentSeries
from .univariate import (
    Coefficient,
    TruncatedIntSeries,
    TruncatedRatSeries,
    TruncatedSeries,
    exact_divide,
    lagrange_inverse,
    series_compose,
    series_differentiate,
    series_divide,
    series_integrate,
    series_inv_sqrt,
    series_mul,
    series_pow,
    series_rational_power,
    series_reciprocal,
    series_reverse,
    series_sqrt,
)
