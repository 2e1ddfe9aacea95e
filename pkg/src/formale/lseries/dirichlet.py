"""
Dirichlet coefficients c_n of L(s) = sum c_n n^-s.

From a curve the coefficients come from the Euler product of local factors
(1 - t_p p^-s + u_p p^(1-2s))^-1: c_p = t_p, c_(p^(k+1)) = t_p c_(p^k) -
p u_p c_(p^(k-1)), and c_mn = c_m c_n for coprime m, n. For the level 11
curve they can also be read off q prod (1 - q^n)^2 (1 - q^(11n))^2.
"""
import json
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

from sympy import factorint, primerange

from ..arithmetic.points import local_data_sweep
from ..curves.reduction import LocalData
from ..curves.weierstrass import WeierstrassCurve
from ..group.formal_group import formal_log
from ..series.univariate import TruncatedIntSeries, TruncatedRatSeries
from ..utils.exceptions import ValidationError
from ..utils.logging import get_logger, log_with_context
from ..utils.validation import parse_integer_list, validate_order

if TYPE_CHECKING:
    from ..utils.caching import TraceCache

logger = get_logger(__name__)


class Provenance(Enum):
    EULER_PRODUCT = "euler"
    ETA_PRODUCT = "eta"
    USER_SUPPLIED = "user"


@dataclass(frozen=True)
class DirichletCoefficients:
    """c_1 .. c_N; ``values[0]`` is c_1."""
    values: Tuple[int, ...]
    provenance: Provenance

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values:
            raise ValidationError("at least c_1 is required")
        if self.values[0] != 1:
            raise ValidationError(f"c_1 must be 1, got {self.values[0]}")

    @property
    def bound(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.bound:
            raise IndexError(f"c_{n} is outside 1 .. {self.bound}")
        return self.values[n - 1]

    def multiplicativity_defects(self) -> List[Tuple[int, int]]:
        """Coprime pairs m < n with c_mn != c_m c_n inside the stored range."""
        defects = []
        for m in range(2, self.bound + 1):
            for n in range(m + 1, self.bound // m + 1):
                if gcd(m, n) == 1 and self[m * n] != self[m] * self[n]:
                    defects.append((m, n))
        return defects

    def is_multiplicative(self) -> bool:
        return not self.multiplicativity_defects()

    def first_difference(self, other: "DirichletCoefficients") -> Optional[int]:
        """Smallest n in the common range with different c_n, or None."""
        for n in range(1, min(self.bound, other.bound) + 1):
            if self[n] != other[n]:
                return n
        return None

    def truncate(self, bound: int) -> "DirichletCoefficients":
        return DirichletCoefficients(self.values[:bound], self.provenance)

    def to_json(self) -> str:
        return json.dumps(list(self.values))

    @classmethod
    def from_json(cls, text: str) -> "DirichletCoefficients":
        return cls(tuple(parse_integer_list(text)), Provenance.USER_SUPPLIED)


def prime_power_coefficients(local: LocalData, bound: int) -> Dict[int, int]:
    """c_(p^k) for p^k <= bound from the local factor at p."""
    p, t_p, u_p = local.p, local.t_p, local.u_p
    values = {1: 1}
    previous, current = 1, t_p
    power = p
    while power <= bound:
        values[power] = current
        previous, current = current, t_p * current - p * u_p * previous
        power *= p
    return values


def euler_coefficients(
    curve: WeierstrassCurve,
    bound: int,
    cache: Optional["TraceCache"] = None,
    assert_minimal: bool = False,
    workers: int = 1,
) -> DirichletCoefficients:
    """
    c_1 .. c_N from point counts and reduction types.

    Bad primes use the reduction type of the model as given; without
    ``assert_minimal`` a warning records that those factors are model
    dependent.
    """
    validate_order(bound, minimum=1, what="coefficient bound")
    primes = list(primerange(2, bound + 1))
    local = {data.p: data for data in local_data_sweep(curve, primes, cache=cache, workers=workers)}
    bad = sorted(p for p, data in local.items() if not data.reduction.is_good)
    if bad and not assert_minimal:
        logger.warning(
            "Bad prime factors taken from an unasserted model",
            **log_with_context(curve=str(curve), primes=bad)
        )

    powers: Dict[int, int] = {1: 1}
    for data in local.values():
        powers.update(prime_power_coefficients(data, bound))

    values = [1] * bound
    for n in range(2, bound + 1):
        product = 1
        for p, e in factorint(n).items():
            product *= powers[p ** e]
        values[n - 1] = product
    logger.debug("Euler product expanded", **log_with_context(curve=str(curve), bound=bound, bad_primes=bad))
    return DirichletCoefficients(tuple(values), Provenance.EULER_PRODUCT)


def _times_one_minus(values: List[int], k: int) -> None:
    """values *= (1 - q^k) in place, truncated to len(values)."""
    for i in range(len(values) - 1, k - 1, -1):
        values[i] -= values[i - k]


def eta_product_level11(bound: int) -> DirichletCoefficients:
    """c_1 .. c_N of q prod_{n>=1} (1 - q^n)^2 (1 - q^(11n))^2."""
    validate_order(bound, minimum=1, what="coefficient bound")
    # values[i] is the coefficient of q^(i+1)
    values = [1] + [0] * (bound - 1)
    for n in range(1, bound):
        _times_one_minus(values, n)
        _times_one_minus(values, n)
    for n in range(11, bound, 11):
        _times_one_minus(values, n)
        _times_one_minus(values, n)
    return DirichletCoefficients(tuple(values), Provenance.ETA_PRODUCT)


def g_series(c: DirichletCoefficients, order: Optional[int] = None) -> TruncatedRatSeries:
    """g(x) = sum c_n x^n / n, of order min(order, N + 1)."""
    g = formal_log(TruncatedIntSeries(list(c.values)))
    if order is not None and order < g.order:
        return g.truncate(order)  # type: ignore[return-value]
    return g


def hasse_defects(c: DirichletCoefficients, good_primes: Sequence[int]) -> List[int]:
    """Good primes p <= N with c_p^2 >= 4p."""
    return [p for p in good_primes if p <= c.bound and c[p] * c[p] >= 4 * p]
