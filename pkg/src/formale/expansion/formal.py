"""
Expansions at the origin in the parameter z = -x/y.

w(z) = -1/y comes from the recurrence obtained by substituting the
Weierstrass equation into itself, or for a6 = 0 from the quadratic it
satisfies. The invariant differential omega = sum b(n) z^(n-1) dz is then

    omega = w'(z) / (3z^2 + 2 a2 z w + a4 w^2 + a1 w) dz

which is dy / (3x^2 + 2 a2 x + a4 - a1 y) rewritten with x = z/w, y = -1/w.
Both numerator and denominator are 3z^2 + O(z^3), so after removing z^2 the
quotient is found by exact integer long division.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

from ..curves.weierstrass import WeierstrassCurve
from ..series.laurent import LaurentSeries
from ..series.univariate import (
    TruncatedIntSeries,
    TruncatedSeries,
    exact_divide,
    series_differentiate,
    series_divide,
    series_inv_sqrt,
    series_mul,
    series_reciprocal,
    series_sqrt,
)
from ..utils.exceptions import (
    DegenerateFamily,
    InsufficientOrder,
    IntegralityViolation,
    ValidationError,
)
from ..utils.logging import get_logger, log_with_context
from ..utils.validation import validate_order

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExpansionBundle:
    """w(z) and b(n) of one curve, both of order N."""
    curve: WeierstrassCurve
    w: TruncatedIntSeries
    b: TruncatedIntSeries

    def __post_init__(self) -> None:
        if self.w.order != self.b.order:
            raise ValidationError("w and b must share one order")
        if self.w.order >= 4 and tuple(self.w.coeffs[:4]) != (0, 0, 0, 1):
            raise ValidationError("w must start z^3 + O(z^4)")
        if self.b.coeffs[0] != 1:
            raise ValidationError("b(1) must be 1")

    @property
    def order(self) -> int:
        return self.w.order

    def s(self, n: int) -> int:
        """Coefficient s_n of z^n in w."""
        if n >= self.order:
            raise InsufficientOrder(f"s_{n} needs order {n + 1}, have {self.order}")
        return int(self.w.coeffs[n])

    def b_at(self, n: int) -> int:
        """b(n), the coefficient of z^(n-1) in omega, for n >= 1."""
        if n < 1:
            raise ValueError("b(n) is indexed from n = 1")
        if n > self.order:
            raise InsufficientOrder(f"b({n}) needs order {n}, have {self.order}")
        return int(self.b.coeffs[n - 1])

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "s": [str(c) for c in self.w.coeffs],
            "b": [str(c) for c in self.b.coeffs],
        }


def w_series_recurrence(curve: WeierstrassCurve, order: int) -> TruncatedIntSeries:
    """
    s_n = a1 s_(n-1) + a2 s_(n-2) + a3 sum_(k+l=n) s_k s_l
          + a4 sum_(k+l=n-1) s_k s_l + a6 sum_(k+l+m=n) s_k s_l s_m

    with s_0 = s_1 = s_2 = 0 and s_3 = 1. Since s_k = 0 for k < 3 the
    quadratic sums only see indices up to n - 3, so every step is explicit.
    """
    validate_order(order, minimum=4)
    a1, a2, a3, a4, a6 = curve.coefficients
    s = [0] * order
    square = [0] * order  # square[n] = sum_{k+l=n} s_k s_l
    s[3] = 1
    for n in range(4, order):
        square[n] = sum(s[k] * s[n - k] for k in range(3, n - 2))
        cube = sum(s[j] * square[n - j] for j in range(3, n - 5)) if a6 else 0
        s[n] = a1 * s[n - 1] + a2 * s[n - 2] + a3 * square[n] + a4 * square[n - 1] + a6 * cube
    logger.debug("Expanded w by recurrence", **log_with_context(curve=str(curve), order=order))
    return TruncatedIntSeries(s)


def _family1_parts(curve: WeierstrassCurve, order: int) -> Tuple[TruncatedIntSeries, TruncatedIntSeries]:
    """P = 1 - a1 z - a2 z^2 and Q = P^2 - 4 z^3 (a3 + a4 z)."""
    if not curve.is_family1:
        raise ValidationError(f"closed forms need a6 = 0, got a6 = {curve.a6} for {curve}")
    p_coeffs = [1, -curve.a1, -curve.a2] + [0] * max(0, order - 3)
    p = TruncatedIntSeries(p_coeffs[:order])
    q = list(series_mul(p, p).coeffs)
    for n, c in ((3, curve.a3), (4, curve.a4)):
        if n < order:
            q[n] -= 4 * c
    return p, TruncatedIntSeries(q)


def w_series_closed_family1(curve: WeierstrassCurve, order: int) -> TruncatedIntSeries:
    """
    w = (P - sqrt(Q)) / (2 (a3 + a4 z)) for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x.

    The minus sign is the root vanishing at z = 0. For a3 = 0 the numerator
    is divided by z first, which costs one coefficient, so it is formed at
    order + 1.

    Raises:
        DegenerateFamily: if a3 = a4 = 0
        IntegralityViolation: if the quotient is not integral
    """
    validate_order(order, minimum=4)
    if curve.a3 == 0 and curve.a4 == 0:
        raise DegenerateFamily(f"a3 = a4 = 0 for {curve}; use the recurrence")
    work = order + 1 if curve.a3 == 0 else order
    p, q = _family1_parts(curve, work)
    numerator = p.to_rat() - series_sqrt(q)
    w: TruncatedSeries
    if curve.a3 != 0:
        denominator = TruncatedIntSeries(([2 * curve.a3, 2 * curve.a4] + [0] * work)[:work])
        w = series_divide(numerator, denominator)
    else:
        w = numerator.shift_down(1) * Fraction(1, 2 * curve.a4)
    logger.debug("Expanded w in closed form", **log_with_context(curve=str(curve), order=order))
    return w.to_int()


def _differential_from_w(curve: WeierstrassCurve, w: TruncatedSeries) -> TruncatedIntSeries:
    """omega from w of order N + 3; the result has order N."""
    derivative = series_differentiate(w)
    m = derivative.order
    w = w.truncate(m)
    w_sq = series_mul(w, w)
    denominator: List[int] = [0] * m
    denominator[2] = 3
    for n in range(1, m):
        denominator[n] += curve.a1 * w.coeffs[n] + 2 * curve.a2 * w.coeffs[n - 1] + curve.a4 * w_sq.coeffs[n]
    return exact_divide(derivative.shift_down(2), TruncatedIntSeries(denominator).shift_down(2))


def invariant_differential(
    curve: WeierstrassCurve,
    order: int,
    w: Optional[TruncatedSeries] = None,
) -> TruncatedIntSeries:
    """
    Coefficients b(1) .. b(N) of omega, as the series sum b(n) z^(n-1).

    ``w`` may be supplied when already known to order N + 3 or more.

    Raises:
        IntegralityViolation: if the long division is inexact, which only a
            wrong w can cause
    """
    validate_order(order, minimum=1)
    if w is None:
        w = w_series_recurrence(curve, order + 3)
    elif w.order < order + 3:
        raise InsufficientOrder(f"b up to {order} needs w to order {order + 3}, have {w.order}")
    b = _differential_from_w(curve, w.truncate(order + 3))
    logger.debug("Expanded invariant differential", **log_with_context(curve=str(curve), order=order))
    return b


def omega_closed_family1(curve: WeierstrassCurve, order: int) -> TruncatedIntSeries:
    """
    omega = Q^(-1/2) with Q = (1 - a1 z - a2 z^2)^2 - 4 z^3 (a3 + a4 z), for a6 = 0.

    Q has degree 4, so Q g' = -(1/2) Q' g gives the five-term recurrence
    2n g_n = sum_{k=1}^{4} (k - 2n) Q_k g_(n-k), one exact division per
    coefficient.

    Raises:
        IntegralityViolation: if a division is inexact
    """
    validate_order(order, minimum=1)
    _, q_series = _family1_parts(curve, max(order, 5))
    q = q_series.coeffs[:5]
    g = [0] * order
    g[0] = 1
    for n in range(1, order):
        acc = 0
        for k in range(1, min(4, n) + 1):
            if q[k]:
                acc += (k - 2 * n) * q[k] * g[n - k]
        value, remainder = divmod(acc, 2 * n)
        if remainder:
            raise IntegralityViolation(f"coefficient of z^{n} is {Fraction(acc, 2 * n)}")
        g[n] = value
    return TruncatedIntSeries(g)


def omega_inv_sqrt_family1(curve: WeierstrassCurve, order: int) -> TruncatedIntSeries:
    """The same closed form through the general rational power routine."""
    validate_order(order, minimum=1)
    _, q = _family1_parts(curve, order)
    return series_inv_sqrt(q).to_int()


def omega_from_trinomials(curve: WeierstrassCurve, order: int) -> TruncatedIntSeries:
    """
    omega = sum_m T_m(a1 + a2 z, z (a3 + a4 z)) z^m for a6 = 0.

    This is the trinomial generating function evaluated at x = a1 + a2 z,
    y = z (a3 + a4 z), t = z, with T_m(x, y) = sum_k C(m,k) C(m-k,k) x^(m-2k) y^k.
    """
    validate_order(order, minimum=1)
    if not curve.is_family1:
        raise ValidationError(f"closed forms need a6 = 0, got a6 = {curve.a6} for {curve}")
    a1, a2, a3, a4, _ = curve.coefficients
    # x^j and (a3 + a4 z)^k as explicit binomial expansions
    x_pow = [[comb(j, i) * a1 ** (j - i) * a2 ** i for i in range(j + 1)] for j in range(order)]
    y_pow = [[comb(k, i) * a3 ** (k - i) * a4 ** i for i in range(k + 1)] for k in range(order)]
    total = [0] * order
    for m in range(order):
        for k in range(m // 2 + 1):
            shift = m + k
            if shift >= order:
                break
            weight = comb(m, k) * comb(m - k, k)
            x_part, y_part = x_pow[m - 2 * k], y_pow[k]
            for i, xi in enumerate(x_part):
                if shift + i >= order:
                    break
                if xi == 0:
                    continue
                for j, yj in enumerate(y_part):
                    if shift + i + j >= order:
                        break
                    total[shift + i + j] += weight * xi * yj
    return TruncatedIntSeries(total)


def formal_coordinates(w: TruncatedSeries) -> Tuple[LaurentSeries, LaurentSeries]:
    """
    x(z) = z/w = z^-2 v and y(z) = -1/w = -z^-3 v with v = z^3/w.

    Raises:
        ValidationError: if w does not start with a unit multiple of z^3
    """
    if w.order < 5 or any(c != 0 for c in w.coeffs[:3]) or w.coeffs[3] not in (1, -1):
        raise ValidationError("w must be z^3 * unit with order at least 5")
    v = series_reciprocal(w.shift_down(3))
    return LaurentSeries(2, v), LaurentSeries(3, -v)


def formal_point_residual(curve: WeierstrassCurve, w: TruncatedSeries) -> LaurentSeries:
    """
    y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6 at (x(z), y(z)).

    The result has a pole of order 6 and is known below z^(N - 9) for w of
    order N, i.e. z^6 times it is known to order N - 3.
    """
    a1, a2, a3, a4, a6 = curve.coefficients
    x, y = formal_coordinates(w)
    constant = LaurentSeries(0, TruncatedIntSeries.monomial(0, x.regular.order, a6))
    x_sq = x * x
    return y * y + a1 * (x * y) + a3 * y - x_sq * x - a2 * x_sq - a4 * x - constant


def verify_point_on_curve(
    curve: WeierstrassCurve,
    order: int,
    w: Optional[TruncatedSeries] = None,
) -> bool:
    """
    True iff every known coefficient of the residual vanishes.

    With w of order N the residual is checked on z^-6 .. z^(N-10); the
    pole of x^3 fixes the loss against the order of w.
    """
    validate_order(order, minimum=8)
    if w is None:
        w = w_series_recurrence(curve, order)
    else:
        w = w.truncate(min(order, w.order))
    residual = formal_point_residual(curve, w)
    bad = residual.known_coefficients()
    if bad:
        logger.debug(
            "Formal point is off the curve",
            **log_with_context(curve=str(curve), lowest=min(bad))
        )
    return not bad


def omega_from_coordinates(
    curve: WeierstrassCurve,
    order: int,
    w: Optional[TruncatedSeries] = None,
) -> TruncatedIntSeries:
    """
    omega = dx / (2y + a1 x + a3) from the Laurent coordinates.

    With x = z^-2 v this is (z v' - 2v) / (-2v + a1 z v + a3 z^3), both
    sides having constant term -2.
    """
    validate_order(order, minimum=1)
    if w is None:
        w = w_series_recurrence(curve, order + 3)
    _, y = formal_coordinates(w.truncate(order + 3))
    v = -y.regular
    n = v.order
    numerator = [(k - 2) * v.coeffs[k] for k in range(n)]
    denominator = [-2 * v.coeffs[k] + (curve.a1 * v.coeffs[k - 1] if k >= 1 else 0) for k in range(n)]
    if n > 3:
        denominator[3] += curve.a3
    return exact_divide(TruncatedIntSeries(numerator), TruncatedIntSeries(denominator))


def expand(curve: WeierstrassCurve, order: int) -> ExpansionBundle:
    """w and b of the curve to a common order N (w is computed to N + 3)."""
    validate_order(order, minimum=4)
    w = w_series_recurrence(curve, order + 3)
    b = invariant_differential(curve, order, w=w)
    return ExpansionBundle(curve=curve, w=w.truncate(order), b=b)
