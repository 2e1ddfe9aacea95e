"""
Point counting on reduced curves over F_p and traces of Frobenius.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, Iterable, List, Optional

from ..curves.reduction import LocalData, classify_reduction, hasse_ok, require_prime
from ..curves.weierstrass import WeierstrassCurve
from ..utils.exceptions import BadReduction, HasseBoundViolation
from ..utils.logging import get_logger, log_with_context

if TYPE_CHECKING:
    from ..utils.caching import TraceCache

logger = get_logger(__name__)


def residue_table(p: int) -> List[int]:
    """chi[r] = Legendre symbol (r / p) for odd p."""
    chi = [-1] * p
    chi[0] = 0
    for y in range(1, (p + 1) // 2):
        chi[y * y % p] = 1
    return chi


def count_points_exhaustive(curve: WeierstrassCurve, p: int) -> int:
    """1 + #{(x, y) in F_p^2 on the reduced curve}, by enumeration."""
    affine = sum(
        1
        for x in range(p)
        for y in range(p)
        if curve.equation(x, y) % p == 0
    )
    return 1 + affine


def count_points_residues(curve: WeierstrassCurve, p: int) -> int:
    """
    Point count for odd p by completing the square:
    (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
    """
    b2, b4, b6, _ = curve.b_invariants
    chi = residue_table(p)
    c2, c1, c0 = b2 % p, (2 * b4) % p, b6 % p
    total = 1 + p
    for x in range(p):
        total += chi[(((4 * x + c2) * x + c1) * x + c0) % p]
    return total


def count_points(curve: WeierstrassCurve, p: int) -> int:
    """
    A_p, the number of points (with infinity) of the curve reduced mod p.

    Raises:
        NotPrime: if p is not prime
        BadReduction: if p divides the discriminant
    """
    require_prime(p)
    if curve.discriminant % p == 0:
        raise BadReduction(f"{curve} has bad reduction at {p}")
    if p <= 3:
        return count_points_exhaustive(curve, p)
    return count_points_residues(curve, p)


def trace(curve: WeierstrassCurve, p: int) -> int:
    """t_p = 1 + p - A_p, checked against Hasse's bound."""
    t_p = 1 + p - count_points(curve, p)
    if not hasse_ok(t_p, p):
        raise HasseBoundViolation(f"t_{p} = {t_p} for {curve} violates |t_p| < 2 sqrt(p)")
    return t_p


def local_data_sweep(
    curve: WeierstrassCurve,
    primes: Iterable[int],
    cache: Optional["TraceCache"] = None,
    workers: int = 1,
) -> List[LocalData]:
    """
    LocalData for every prime, sorted by p whatever order the workers finish in.
    """
    primes = sorted(set(primes))
    logger.debug("Local data sweep", **log_with_context(curve=str(curve), primes=len(primes), workers=workers))
    if workers <= 1 or len(primes) < 2:
        results = [classify_reduction(curve, p, cache) for p in primes]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda q: classify_reduction(curve, q, cache), primes))
    return sorted(results, key=lambda data: data.p)
