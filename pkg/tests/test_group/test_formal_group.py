"""
Tests for formal group laws and the strict isomorphism to the L-series law.
"""
from fractions import Fraction

import pytest

from conftest import random_family1_curves, random_general_curves
from formale.expansion.formal import invariant_differential
from formale.group.formal_group import (
    FormalGroupLaw,
    check_associativity,
    formal_exp,
    formal_log,
    group_law,
    intertwines,
    lseries_formal_group,
    resolve_isomorphism,
    strict_isomorphism,
)
from formale.lseries.dirichlet import eta_product_level11, g_series
from formale.series.bivariate import BivariateSeries
from formale.series.univariate import TruncatedIntSeries
from formale.utils.exceptions import IntegralityViolation, ValidationError


def test_x3_plus_x_degree_five(x3_plus_x):
    law = group_law(x3_plus_x, 6)
    assert law.F.homogeneous_part(5) == {(4, 1): -2, (3, 2): -4, (2, 3): -4, (1, 4): -2}
    assert law.F.homogeneous_part(2) == {}
    assert law.integrality_verified


def test_low_degree_terms(general_curve):
    """F = X + Y - a1 XY - a2 (X^2 Y + X Y^2) + O(deg 4)."""
    law = group_law(general_curve, 4)
    a1, a2 = general_curve.a1, general_curve.a2
    assert law.F.homogeneous_part(1) == {(1, 0): 1, (0, 1): 1}
    assert law.F.homogeneous_part(2) == {(1, 1): -a1}
    assert law.F.homogeneous_part(3) == {(2, 1): -a2, (1, 2): -a2}


def test_axioms_on_random_curves():
    for curve in random_general_curves(5):
        law = group_law(curve, 8)
        assert law.identity_holds()
        assert law.is_commutative()
        assert check_associativity(law, cap=6)


@pytest.mark.slow
@pytest.mark.parametrize(
    "curve",
    random_family1_curves(10) + random_general_curves(10),
    ids=str,
)
def test_integral_through_degree_12(curve):
    law = group_law(curve, 13)
    assert law.total_degree_bound == 13
    assert law.integrality_verified
    assert law.F.is_integral()
    assert law.F.non_integral_terms() == []
    assert law.identity_holds() and law.is_commutative()


def test_supplied_b_too_short(level11):
    with pytest.raises(ValidationError):
        group_law(level11, 10, b=invariant_differential(level11, 5))


def test_associativity_defect_detected():
    """X + Y + X^2 Y has the identity but is neither commutative nor associative."""
    law = FormalGroupLaw(BivariateSeries({(1, 0): 1, (0, 1): 1, (2, 1): 1}, 5))
    assert law.identity_holds()
    assert not law.is_commutative()
    assert law.associativity_defects(cap=4)
    assert not check_associativity(law, cap=4)


def test_associativity_cap_validated(x3_plus_x):
    with pytest.raises(ValidationError):
        check_associativity(group_law(x3_plus_x, 5), cap=0)


def test_formal_log_and_exp(y2_plus_y):
    f = formal_log(invariant_differential(y2_plus_y, 10))
    assert f.order == 11
    assert f[4] == Fraction(1, 2)
    assert list(formal_exp(f).coeffs[:2]) == [0, 1]


def test_formal_log_needs_unit_leading_term():
    with pytest.raises(ValidationError):
        formal_log(TruncatedIntSeries([2, 1, 0]))


def test_additive_lseries_law():
    law = lseries_formal_group([1, 0, 0, 0, 0], 6)
    assert law.F == BivariateSeries({(1, 0): 1, (0, 1): 1}, 6)


def test_lseries_law_integrality_violation():
    with pytest.raises(IntegralityViolation):
        lseries_formal_group([1, 0, 0, 1], 5)


def test_lseries_law_needs_enough_coefficients():
    with pytest.raises(ValidationError):
        lseries_formal_group([1, -2], 6)


def test_strict_isomorphism_with_itself(level11):
    f = formal_log(invariant_differential(level11, 12))
    phi = strict_isomorphism(f, f)
    assert list(phi.coeffs) == [0, 1] + [0] * (phi.order - 2)


def test_strict_isomorphism_rejects_non_strict():
    with pytest.raises(ValidationError):
        strict_isomorphism(TruncatedIntSeries([0, 2, 1]), TruncatedIntSeries([0, 1, 0]))


def test_level11_isomorphism_is_integral(level11):
    f = formal_log(invariant_differential(level11, 20))
    g = g_series(eta_product_level11(20))
    phi = strict_isomorphism(f, g)
    assert phi.order == 21
    assert phi.is_integral()


@pytest.mark.slow
def test_level11_isomorphism_intertwines(level11):
    f = formal_log(invariant_differential(level11, 12))
    eta = eta_product_level11(12)
    g = g_series(eta)
    source = group_law(level11, 11)
    target = lseries_formal_group(eta.values, 11)
    assert intertwines(strict_isomorphism(f, g), source, target, 11)

    report = resolve_isomorphism(f, g, source, target, 11)
    assert report.chosen == "g_inv_after_f"
    assert report.phi is not None
    assert report.phi.integral
    assert report.phi.first_non_integral is None
    assert report.to_dict()["chosen"] == "g_inv_after_f"


def test_law_to_dict(x3_plus_x):
    data = group_law(x3_plus_x, 4).to_dict()
    assert data["total_degree_bound"] == 4
    assert data["integrality_verified"] is True
    assert data["coefficients"] == [[0, 1, "1"], [1, 0, "1"]]
