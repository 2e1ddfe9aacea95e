"""
Weierstrass models, discriminants and reduction types.
"""
from .reduction import LocalData, ReductionType, classify_reduction, hasse_ok
from .weierstrass import WeierstrassCurve, discriminant, parse_curve
