"""
Reduction types and per-prime local data (t_p, u_p).
"""
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

from sympy import isprime, legendre_symbol

from ..utils.exceptions import HasseBoundViolation, NotPrime, ValidationError
from ..utils.logging import get_logger, log_with_context
from .weierstrass import WeierstrassCurve

if TYPE_CHECKING:
    from ..utils.caching import TraceCache

logger = get_logger(__name__)


class ReductionType(Enum):
    GOOD = "good"
    MULTIPLICATIVE_SPLIT = "split"
    MULTIPLICATIVE_NONSPLIT = "nonsplit"
    ADDITIVE = "additive"

    @property
    def is_good(self) -> bool:
        return self is ReductionType.GOOD

    @property
    def is_multiplicative(self) -> bool:
        return self in (ReductionType.MULTIPLICATIVE_SPLIT, ReductionType.MULTIPLICATIVE_NONSPLIT)


_BAD_LOCAL_FACTORS = {
    ReductionType.MULTIPLICATIVE_SPLIT: (1, 0),
    ReductionType.MULTIPLICATIVE_NONSPLIT: (-1, 0),
    ReductionType.ADDITIVE: (0, 0),
}


def hasse_ok(t_p: int, p: int) -> bool:
    """|t_p| < 2 sqrt(p), decided exactly as t_p^2 < 4p."""
    return t_p * t_p < 4 * p


@dataclass(frozen=True)
class LocalData:
    """Local L-factor data of a curve at a prime p."""
    p: int
    reduction: ReductionType
    a_p: Optional[int]
    t_p: int
    u_p: int

    def __post_init__(self) -> None:
        if self.reduction.is_good:
            if self.a_p is None:
                raise ValidationError(f"good reduction at {self.p} needs a point count")
            if self.u_p != 1 or self.t_p != 1 + self.p - self.a_p:
                raise ValidationError(f"inconsistent good local data at {self.p}")
            if not hasse_ok(self.t_p, self.p):
                raise HasseBoundViolation(f"t_{self.p} = {self.t_p} violates |t_p| < 2 sqrt(p)")
        else:
            if self.a_p is not None:
                raise ValidationError(f"bad reduction at {self.p} carries no point count")
            if (self.t_p, self.u_p) != _BAD_LOCAL_FACTORS[self.reduction]:
                raise ValidationError(f"(t_p, u_p) = {(self.t_p, self.u_p)} does not match {self.reduction.value}")

    @classmethod
    def good(cls, p: int, a_p: int) -> "LocalData":
        return cls(p, ReductionType.GOOD, a_p, 1 + p - a_p, 1)

    @classmethod
    def bad(cls, p: int, reduction: ReductionType) -> "LocalData":
        t_p, u_p = _BAD_LOCAL_FACTORS[reduction]
        return cls(p, reduction, None, t_p, u_p)

    def to_dict(self) -> Dict[str, Any]:
        return {"A_p": self.a_p, "t_p": self.t_p, "u_p": self.u_p, "type": self.reduction.value}

    @classmethod
    def from_dict(cls, p: int, data: Dict[str, Any]) -> "LocalData":
        return cls(p, ReductionType(data["type"]), data["A_p"], int(data["t_p"]), int(data["u_p"]))


def require_prime(p: int) -> None:
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")


def singular_point(curve: WeierstrassCurve, p: int) -> Tuple[int, int]:
    """
    The unique singular point of the reduced curve mod p.

    Characteristic 2 and 3 search all of F_p^2 for a common zero of the
    equation and both partials; for p >= 5 the y-partial fixes y from x.
    """
    candidates: List[Tuple[int, int]] = []
    if p <= 3:
        for x in range(p):
            for y in range(p):
                if (curve.equation(x, y) % p == 0
                        and curve.partial_x(x, y) % p == 0
                        and curve.partial_y(x, y) % p == 0):
                    candidates.append((x, y))
    else:
        half = pow(2, -1, p)
        for x in range(p):
            y = (-(curve.a1 * x + curve.a3) * half) % p
            if curve.equation(x, y) % p == 0 and curve.partial_x(x, y) % p == 0:
                candidates.append((x, y))
    if len(candidates) != 1:
        raise ValidationError(
            f"expected one singular point of {curve} mod {p}, found {len(candidates)}"
        )
    return candidates[0]


def tangent_cone_type(curve: WeierstrassCurve, p: int, point: Tuple[int, int]) -> ReductionType:
    """
    Classify the node or cusp at ``point`` from its tangent cone
    Y^2 + a1 XY - (3 x0 + a2) X^2.
    """
    x0, _ = point
    c = -(3 * x0 + curve.a2)
    if p == 2:
        roots = [t for t in range(2) if (t * t + curve.a1 * t + c) % 2 == 0]
        if len(roots) == 2:
            return ReductionType.MULTIPLICATIVE_SPLIT
        if len(roots) == 1:
            return ReductionType.ADDITIVE
        return ReductionType.MULTIPLICATIVE_NONSPLIT
    delta = (curve.a1 * curve.a1 - 4 * c) % p
    if delta == 0:
        return ReductionType.ADDITIVE
    if legendre_symbol(delta, p) == 1:
        return ReductionType.MULTIPLICATIVE_SPLIT
    return ReductionType.MULTIPLICATIVE_NONSPLIT


def classify_reduction(
    curve: WeierstrassCurve,
    p: int,
    cache: Optional["TraceCache"] = None,
) -> LocalData:
    """
    Local data of ``curve`` at ``p``; good reduction iff p does not divide
    the discriminant of the given model (no minimisation is attempted).

    Raises:
        NotPrime: if p is not prime
    """
    require_prime(p)
    if cache is not None:
        cached = cache.get(curve, p)
        if cached is not None:
            return cached

    if curve.discriminant % p != 0:
        from ..arithmetic.points import count_points

        data = LocalData.good(p, count_points(curve, p))
    else:
        point = singular_point(curve, p)
        data = LocalData.bad(p, tangent_cone_type(curve, p, point))
        logger.debug(
            "Bad reduction",
            **log_with_context(curve=str(curve), p=p, type=data.reduction.value, point=list(point))
        )

    if cache is not None:
        cache.put(curve, p, data)
    return data
