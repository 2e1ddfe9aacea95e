"""
Formal logarithms and the formal group laws built from them.

For a logarithm f(z) = z + ... the law is F(X, Y) = f^-1(f(X) + f(Y)).
The curve law takes f = integral of omega; the L-series law takes
g(x) = sum c_n x^n / n. Both are integral, and so is the strict
isomorphism g^-1 o f between them when c is the true L-series.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..curves.weierstrass import WeierstrassCurve
from ..series.bivariate import BivariateSeries, compose_bivariate
from ..series.univariate import (
    TruncatedIntSeries,
    TruncatedRatSeries,
    TruncatedSeries,
    series_compose,
    series_integrate,
    series_reverse,
)
from ..utils.exceptions import IntegralityViolation, ValidationError
from ..utils.logging import get_logger, log_with_context
from ..utils.validation import validate_order

logger = get_logger(__name__)

DEFAULT_ASSOCIATIVITY_CAP = 8


@dataclass(frozen=True)
class FormalGroupLaw:
    """F(X, Y) known below total degree D."""
    F: BivariateSeries
    integrality_verified: bool = False
    label: str = ""

    @property
    def total_degree_bound(self) -> int:
        return self.F.total_degree_bound

    def identity_holds(self) -> bool:
        """F(X, 0) = X and F(0, Y) = Y."""
        expected = [0, 1] + [0] * (self.total_degree_bound - 2)
        expected = expected[: self.total_degree_bound]
        return self.F.restrict_x() == expected and self.F.restrict_y() == expected

    def is_commutative(self) -> bool:
        return self.F.swap() == self.F

    def associativity_defects(self, cap: int = DEFAULT_ASSOCIATIVITY_CAP) -> List[Tuple[int, int, int]]:
        """
        Grid points (a, b, degree) where F(F(X, aX), bX) and F(X, F(aX, bX))
        first differ.

        A homogeneous part of degree d in three variables vanishes iff it
        vanishes at (1, a, b) for all a, b in 0 .. d, so the grid 0 .. cap
        covers every degree below min(cap + 1, D).
        """
        order = min(cap + 1, self.total_degree_bound)
        x = TruncatedIntSeries.monomial(1, order)
        defects = []
        for a in range(cap + 1):
            ax = x * a
            for b in range(cap + 1):
                bx = x * b
                left = self.F.evaluate_univariate(self.F.evaluate_univariate(x, ax), bx)
                right = self.F.evaluate_univariate(x, self.F.evaluate_univariate(ax, bx))
                diff = left - right
                if diff.valuation() < diff.order:
                    defects.append((a, b, diff.valuation()))
        return defects

    def is_associative(self, cap: int = DEFAULT_ASSOCIATIVITY_CAP) -> bool:
        return not self.associativity_defects(cap)

    def to_dict(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "total_degree_bound": self.total_degree_bound,
            "integrality_verified": self.integrality_verified,
            "coefficients": [[i, j, str(c)] for (i, j), c in self.F],
        }


def check_associativity(law: FormalGroupLaw, cap: int = DEFAULT_ASSOCIATIVITY_CAP) -> bool:
    """Exact associativity below total degree min(cap + 1, D)."""
    validate_order(cap, minimum=1, what="associativity cap")
    defects = law.associativity_defects(cap)
    if defects:
        a, b, degree = defects[0]
        logger.warning(
            "Formal group law is not associative",
            **log_with_context(label=law.label, a=a, b=b, degree=degree, defects=len(defects))
        )
    return not defects


def formal_log(b: TruncatedSeries) -> TruncatedRatSeries:
    """
    f(z) = sum_{n>=1} b(n) z^n / n for b stored as sum b(n) z^(n-1).

    The result has order b.order + 1.
    """
    if b.coeffs[0] != 1:
        raise ValidationError(f"leading coefficient must be 1, got {b.coeffs[0]}")
    return series_integrate(b)


def formal_exp(f: TruncatedSeries) -> TruncatedSeries:
    """The compositional inverse of a logarithm."""
    return series_reverse(f)


def law_from_logarithm(log: TruncatedSeries, bound: int, label: str = "") -> FormalGroupLaw:
    """
    F = log^-1(log(X) + log(Y)) below total degree ``bound``.

    Raises:
        IntegralityViolation: if some coefficient of F is not an integer
    """
    validate_order(bound, minimum=2, what="total degree bound")
    if log.order < bound:
        raise ValidationError(f"logarithm of order {log.order} cannot fix degree {bound - 1}")
    log = log.truncate(bound)
    inverse = series_reverse(log)
    argument = BivariateSeries.from_univariate(log, "X") + BivariateSeries.from_univariate(log, "Y")
    law = compose_bivariate(inverse, argument)
    bad = law.non_integral_terms()
    if bad:
        (i, j), value = bad[0]
        logger.error(
            "Non-integral formal group law",
            **log_with_context(label=label, monomial=[i, j], value=str(value), count=len(bad))
        )
        raise IntegralityViolation(f"coefficient of X^{i} Y^{j} in {label or 'F'} is {value}")
    logger.debug("Built formal group law", **log_with_context(label=label, bound=bound, terms=len(law.coeffs)))
    return FormalGroupLaw(law.to_integral(), integrality_verified=True, label=label)


def group_law(curve: WeierstrassCurve, bound: int, b: Optional[TruncatedSeries] = None) -> FormalGroupLaw:
    """
    The formal group law of the curve below total degree D.

    ``b`` may carry b(1) .. b(D-1) or more from an earlier expansion.
    """
    validate_order(bound, minimum=3, what="total degree bound")
    if b is None:
        from ..expansion.formal import invariant_differential

        b = invariant_differential(curve, bound - 1)
    elif b.order < bound - 1:
        raise ValidationError(f"b needs order {bound - 1}, have {b.order}")
    return law_from_logarithm(formal_log(b.truncate(bound - 1)), bound, label=f"F{curve}")


def lseries_formal_group(c: Sequence[int], bound: int) -> FormalGroupLaw:
    """G = g^-1(g(x) + g(y)) for g = sum c_n x^n / n, c[0] holding c_1."""
    validate_order(bound, minimum=2, what="total degree bound")
    if len(c) < bound - 1:
        raise ValidationError(f"G below degree {bound} needs c_1 .. c_{bound - 1}, have {len(c)}")
    if c[0] != 1:
        raise ValidationError(f"c_1 must be 1, got {c[0]}")
    g = formal_log(TruncatedIntSeries(list(c[: bound - 1])))
    return law_from_logarithm(g, bound, label="G")


def strict_isomorphism(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """phi = g^-1 o f, so that g(phi) = f."""
    for name, series in (("f", f), ("g", g)):
        if series.order < 2 or series.coeffs[0] != 0 or series.coeffs[1] != 1:
            raise ValidationError(f"{name} must be z + O(z^2)")
    return series_compose(series_reverse(g), f)


def intertwines(phi: TruncatedSeries, source: FormalGroupLaw, target: FormalGroupLaw, degree: int) -> bool:
    """phi(F(X, Y)) = G(phi(X), phi(Y)) below total degree ``degree``."""
    bound = min(degree, source.total_degree_bound, target.total_degree_bound, phi.order)
    left = compose_bivariate(phi.truncate(bound), source.F.truncate(bound))
    phi_x = BivariateSeries.from_univariate(phi, "X", bound)
    phi_y = BivariateSeries.from_univariate(phi, "Y", bound)
    right = target.F.truncate(bound).substitute(phi_x, phi_y)
    return left == right


@dataclass(frozen=True)
class IsomorphismCandidate:
    orientation: str
    series: TruncatedSeries
    integral: bool
    first_non_integral: Optional[int]
    intertwines: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "orientation": self.orientation,
            "integral": self.integral,
            "first_non_integral": self.first_non_integral,
            "intertwines": self.intertwines,
            "coefficients": [str(c) for c in self.series.coeffs],
        }


@dataclass(frozen=True)
class IsomorphismReport:
    """Both composition orders, with the one satisfying the intertwining identity."""
    candidates: Tuple[IsomorphismCandidate, ...]
    degree: int
    chosen: Optional[str] = field(default=None)

    @property
    def phi(self) -> Optional[IsomorphismCandidate]:
        for candidate in self.candidates:
            if candidate.orientation == self.chosen:
                return candidate
        return None

    def to_dict(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "chosen": self.chosen,
            "candidates": [c.to_dict() for c in self.candidates],
        }


def _first_non_integral(series: TruncatedSeries) -> Optional[int]:
    for n, c in enumerate(series.coeffs):
        if isinstance(c, Fraction) and c.denominator != 1:
            return n
    return None


def resolve_isomorphism(
    f: TruncatedSeries,
    g: TruncatedSeries,
    source: FormalGroupLaw,
    target: FormalGroupLaw,
    degree: int,
) -> IsomorphismReport:
    """
    Compute g^-1 o f and f^-1 o g and test each against
    phi(F(X, Y)) = G(phi(X), phi(Y)) below ``degree``.

    Non-integrality is reported, not raised: it points at the c-sequence
    rather than at the library.
    """
    candidates = []
    for orientation, outer, inner in (("g_inv_after_f", g, f), ("f_inv_after_g", f, g)):
        phi = strict_isomorphism(inner, outer)
        candidates.append(IsomorphismCandidate(
            orientation=orientation,
            series=phi,
            integral=phi.is_integral(),
            first_non_integral=_first_non_integral(phi),
            intertwines=intertwines(phi, source, target, degree),
        ))
    chosen = next((c.orientation for c in candidates if c.intertwines), None)
    report = IsomorphismReport(tuple(candidates), degree, chosen)
    logger.debug(
        "Resolved strict isomorphism",
        **log_with_context(chosen=chosen, integral=[c.integral for c in candidates])
    )
    if chosen is None:
        logger.warning("Neither composition order intertwines the two laws", **log_with_context(degree=degree))
    return report
