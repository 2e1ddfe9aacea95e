"""
Formal group laws of curves and of L-series, and the isomorphism between them.
"""
from .formal_group import (
    DEFAULT_ASSOCIATIVITY_CAP,
    FormalGroupLaw,
    IsomorphismCandidate,
    IsomorphismReport,
    check_associativity,
    formal_exp,
    formal_log,
    group_law,
    intertwines,
    law_from_logarithm,
    lseries_formal_group,
    resolve_isomorphism,
    strict_isomorphism,
)
