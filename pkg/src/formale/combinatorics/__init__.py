"""
Closed-form coefficient formulas and the polynomials they are built from.
"""
from .closed_forms import (
    RemarkComparison,
    b_closed_family1,
    b_closed_family2,
    binomial,
    central_trinomial,
    compare_tate_remark,
    homogenized_legendre,
    legendre,
    tate_remark_b,
    tate_remark_b_specialized,
    w_coeff_family2,
)
from .polynomials import BivariatePolynomial, Polynomial
