"""
Checks of the Atkin-Swinnerton-Dyer congruences and their corollaries.

Every check computes the exact left-hand side and stores it with its
modulus; nothing is reduced before it is recorded. Traces always come from
point counting, never from the formulas under test.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import TYPE_CHECKING, Callable, Iterable, List, Optional, Sequence, Union

from sympy import primerange

from ..arithmetic.points import local_data_sweep
from ..combinatorics.closed_forms import binomial
from ..curves.reduction import LocalData, classify_reduction
from ..curves.weierstrass import WeierstrassCurve
from ..expansion.formal import ExpansionBundle, invariant_differential, omega_closed_family1
from ..lseries.dirichlet import DirichletCoefficients, eta_product_level11
from ..series.univariate import TruncatedIntSeries
from ..utils.exceptions import InsufficientOrder, MinimalityNotAsserted, ValidationError
from ..utils.logging import get_logger, log_with_context
from ..utils.validation import validate_bound, validate_variant
from .report import CongruenceReport, failures, sort_reports

if TYPE_CHECKING:
    from ..utils.caching import TraceCache

logger = get_logger(__name__)

AS_PRINTED = "as_printed"
WITH_A_POWER = "with_a_power"
VARIANTS = (AS_PRINTED, WITH_A_POWER)

# y^2 - y = x^3 - x^2, the b = c = 1 Tate normal form of conductor 11
LEVEL11_CURVE = WeierstrassCurve(0, -1, -1, 0, 0)


@dataclass(frozen=True)
class DifferentialCoefficients:
    """b(1) .. b(N) of one curve with the b(n||p) convention."""
    curve: WeierstrassCurve
    b: TruncatedIntSeries

    @property
    def order(self) -> int:
        return self.b.order

    def require(self, index: int) -> None:
        if index > self.order:
            raise InsufficientOrder(f"b({index}) needed but the expansion stops at b({self.order})")

    def at(self, n: int) -> int:
        if n < 1:
            raise ValueError("b(n) is indexed from n = 1")
        self.require(n)
        return int(self.b.coeffs[n - 1])

    def parallel(self, n: int, p: int) -> int:
        """b(n||p): b(n/p) when p divides n, else 0."""
        return self.at(n // p) if n % p == 0 else 0


def differential_coefficients(curve: WeierstrassCurve, order: int) -> DifferentialCoefficients:
    """
    b(1) .. b(N); curves with a6 = 0 use the closed form, which agrees with
    the generic expansion and is linear in N.
    """
    if curve.is_family1:
        b = omega_closed_family1(curve, order)
    else:
        b = invariant_differential(curve, order)
    return DifferentialCoefficients(curve, b)


def b_at(curve: WeierstrassCurve, n: int) -> int:
    """b(n) of the curve, expanding just far enough."""
    return differential_coefficients(curve, n).at(n)


Expansion = Union[ExpansionBundle, DifferentialCoefficients]


def _coefficients(curve: WeierstrassCurve, needed: int, expansion: Optional[Expansion]) -> DifferentialCoefficients:
    if expansion is None:
        return differential_coefficients(curve, needed)
    if isinstance(expansion, ExpansionBundle):
        expansion = DifferentialCoefficients(expansion.curve, expansion.b)
    if expansion.curve != curve:
        raise ValidationError(f"expansion belongs to {expansion.curve}, not {curve}")
    if expansion.order < needed:
        raise InsufficientOrder(f"the check needs b up to {needed}, the expansion has order {expansion.order}")
    return expansion


def _local(curve: WeierstrassCurve, p: int, cache: Optional["TraceCache"], assert_minimal: bool) -> LocalData:
    data = classify_reduction(curve, p, cache)
    if not data.reduction.is_good and not assert_minimal:
        raise MinimalityNotAsserted(
            f"{curve} has {data.reduction.value} reduction at {p}; bad-prime checks need a minimal model"
        )
    return data


def _graded_pairs(p: int, n_max: int, s_max: int) -> Iterable[tuple]:
    """(n, s) with n <= n_max, s <= s_max and p^(s-1) | n."""
    for n in range(1, n_max + 1):
        for s in range(1, s_max + 1):
            if n % p ** (s - 1) == 0:
                yield n, s


def check_thm2(
    curve: WeierstrassCurve,
    p: int,
    n_max: int,
    s_max: int,
    expansion: Optional[Expansion] = None,
    assert_minimal: bool = False,
    cache: Optional["TraceCache"] = None,
) -> List[CongruenceReport]:
    """
    b(np) - t_p b(n) + p u_p b(n||p) = 0 mod p^s whenever p^(s-1) | n.

    Raises:
        InsufficientOrder: if ``expansion`` stops before b(n_max p)
        MinimalityNotAsserted: at a bad prime without ``assert_minimal``
    """
    validate_bound(n_max, "n_max")
    validate_bound(s_max, "s_max")
    local = _local(curve, p, cache, assert_minimal)
    coeffs = _coefficients(curve, n_max * p, expansion)
    reports = []
    for n, s in _graded_pairs(p, n_max, s_max):
        residual = coeffs.at(n * p) - local.t_p * coeffs.at(n) + p * local.u_p * coeffs.parallel(n, p)
        reports.append(CongruenceReport("Thm2", curve.coefficients, p, n, s, p ** s, residual))
    return _finish(reports, "Thm2", curve, p)


def check_cor1(
    curve: WeierstrassCurve,
    p: int,
    n_max: int,
    s_max: int = 2,
    expansion: Optional[Expansion] = None,
    assert_minimal: bool = False,
    cache: Optional["TraceCache"] = None,
) -> List[CongruenceReport]:
    """The good, multiplicative and additive clauses, chosen by reduction type at p."""
    validate_bound(n_max, "n_max")
    validate_bound(s_max, "s_max")
    local = _local(curve, p, cache, assert_minimal)
    coeffs = _coefficients(curve, n_max * p, expansion)
    key = curve.coefficients
    t_p = local.t_p
    b = coeffs.at
    reports = []
    if local.reduction.is_good:
        reports.append(CongruenceReport("Cor1-good-a", key, p, 1, 1, p, b(p) - t_p))
        for n in range(1, n_max + 1):
            if n % p:
                reports.append(CongruenceReport("Cor1-good-b", key, p, n, 1, p, b(n * p) - b(n) * b(p)))
        for n, s in _graded_pairs(p, n_max, s_max):
            residual = b(n * p) - t_p * b(n) + p * coeffs.parallel(n, p)
            reports.append(CongruenceReport("Cor1-good-c", key, p, n, s, p ** s, residual))
    elif local.reduction.is_multiplicative:
        reports.append(CongruenceReport("Cor1-mult-a", key, p, 1, 1, p, b(p) - t_p))
        for n, s in _graded_pairs(p, n_max, s_max):
            reports.append(CongruenceReport("Cor1-mult-b", key, p, n, s, p ** s, b(n * p) - t_p * b(n)))
    else:
        for n, s in _graded_pairs(p, n_max, s_max):
            reports.append(CongruenceReport("Cor1-additive", key, p, n, s, p ** s, b(n * p)))
    return _finish(reports, "Cor1", curve, p)


def _finish(reports: List[CongruenceReport], family: str, curve: WeierstrassCurve, p: Optional[int] = None) -> List[CongruenceReport]:
    reports = sort_reports(reports)
    failed = failures(reports)
    logger.debug(
        "Congruence check",
        **log_with_context(family=family, curve=str(curve), p=p, reports=len(reports), failed=len(failed))
    )
    if failed:
        first = failed[0]
        logger.warning(
            "Congruence failed",
            **log_with_context(statement=first.statement, p=first.p, n=first.n, s=first.s, variant=first.variant)
        )
    return reports


def _run_per_prime(
    check: Callable[[int], List[CongruenceReport]],
    primes: Sequence[int],
    workers: int,
) -> List[CongruenceReport]:
    if workers <= 1 or len(primes) < 2:
        batches = [check(p) for p in primes]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(check, primes))
    return sort_reports(report for batch in batches for report in batch)


def sweep_thm2(
    curve: WeierstrassCurve,
    p_max: int,
    s_max: int = 2,
    n_max: Optional[int] = None,
    n_multiple: int = 3,
    assert_minimal: bool = False,
    cache: Optional["TraceCache"] = None,
    workers: int = 1,
) -> List[CongruenceReport]:
    """
    check_thm2 at every good p <= p_max (every p with ``assert_minimal``),
    n <= n_max, or n <= n_multiple * p when n_max is not given. One
    expansion serves all primes.
    """
    validate_bound(p_max, "p_max")
    local = local_data_sweep(curve, primerange(2, p_max + 1), cache=cache, workers=workers)
    primes = [data.p for data in local if assert_minimal or data.reduction.is_good]
    if not primes:
        return []

    def n_limit(p: int) -> int:
        return n_max if n_max is not None else n_multiple * p

    coeffs = differential_coefficients(curve, max(n_limit(p) * p for p in primes))
    return _run_per_prime(
        lambda p: check_thm2(curve, p, n_limit(p), s_max, coeffs, assert_minimal, cache),
        primes,
        workers,
    )


def sweep_cor1(
    curve: WeierstrassCurve,
    p_max: int,
    n_max: int,
    s_max: int = 2,
    assert_minimal: bool = False,
    cache: Optional["TraceCache"] = None,
    workers: int = 1,
) -> List[CongruenceReport]:
    """check_cor1 at every good p <= p_max (every p with ``assert_minimal``)."""
    validate_bound(p_max, "p_max")
    local = local_data_sweep(curve, primerange(2, p_max + 1), cache=cache, workers=workers)
    primes = [data.p for data in local if assert_minimal or data.reduction.is_good]
    if not primes:
        return []
    coeffs = differential_coefficients(curve, n_max * max(primes))
    return _run_per_prime(
        lambda p: check_cor1(curve, p, n_max, s_max, coeffs, assert_minimal, cache),
        primes,
        workers,
    )


def _variants(variant: Optional[str]) -> Sequence[str]:
    return VARIANTS if variant is None else (validate_variant(variant),)


def _binomial_family(m: int, period: int, a: int, variant: str) -> int:
    """
    C(2q, q) with q = (m - 1)/period, times a^q when the a-power is kept;
    0 unless m = 1 mod period (b vanishes there).
    """
    if m % period != 1:
        return 0
    q = (m - 1) // period
    value = comb(2 * q, q)
    return value * a ** q if variant == WITH_A_POWER else value


def check_cor33(
    a: int,
    p_max: int,
    variant: Optional[str] = None,
    n_max: int = 21,
    cache: Optional["TraceCache"] = None,
    workers: int = 1,
) -> List[CongruenceReport]:
    """
    y^2 = x^3 + a x at primes p not dividing 2a:
    (a) t_p = 0 for p = 3 mod 4, exactly;
    for p = 1 mod 4, with B(m) = C((m-1)/2, (m-1)/4) [a^((m-1)/4)]:
    (b) t_p = B(p) mod p; (c) B(np) = B(n) B(p) mod p for n = 1 mod 4;
    (d) B(p^2) - t_p B(p) + p = 0 mod p^2.
    Parts (b) to (d) run for each requested reading.
    """
    if a == 0:
        raise ValidationError("a must be nonzero")
    validate_bound(p_max, "p_max")
    curve = WeierstrassCurve(0, 0, 0, a, 0)
    key = curve.coefficients
    readings = _variants(variant)
    primes = [p for p in primerange(3, p_max + 1) if a % p]

    def check(p: int) -> List[CongruenceReport]:
        t_p = classify_reduction(curve, p, cache).t_p
        if p % 4 == 3:
            return [CongruenceReport("Cor33-a", key, p, 1, 0, 0, t_p)]
        reports = []
        for reading in readings:
            def B(m: int) -> int:
                return _binomial_family(m, 4, a, reading)

            reports.append(CongruenceReport("Cor33-b", key, p, 1, 1, p, t_p - B(p), reading))
            for n in range(1, n_max + 1, 4):
                reports.append(CongruenceReport("Cor33-c", key, p, n, 1, p, B(n * p) - B(n) * B(p), reading))
            reports.append(CongruenceReport("Cor33-d", key, p, p, 2, p * p, B(p * p) - t_p * B(p) + p, reading))
        return reports

    return _finish(_run_per_prime(check, primes, workers), "Cor33", curve)


def check_cor34(
    a: int,
    p_max: int,
    variant: Optional[str] = None,
    n_max: int = 10,
    s_max: int = 2,
    cache: Optional["TraceCache"] = None,
    workers: int = 1,
) -> List[CongruenceReport]:
    """
    y^2 + a y = x^3 at primes p not dividing 3a:
    (a) t_p = 0 for p = 2 mod 3, exactly;
    for p = 1 mod 3, with B(m) = C(2(m-1)/3, (m-1)/3) [a^((m-1)/3)]:
    (b) t_p = B(p) mod p; (c) B(np) = B(n) B(p) mod p for n = 1 mod 3;
    (d) B(np) - t_p B(n) + p B(n||p) = 0 mod p^s, tested only where
    p^(s-1) | n, as in check_thm2.
    """
    if a == 0:
        raise ValidationError("a must be nonzero")
    validate_bound(p_max, "p_max")
    curve = WeierstrassCurve(0, 0, a, 0, 0)
    key = curve.coefficients
    readings = _variants(variant)
    primes = [p for p in primerange(2, p_max + 1) if p != 3 and a % p]
    condition_note = "tested for n = 0 mod p^(s-1); the printed condition reads n = p^(s-1)"

    def check(p: int) -> List[CongruenceReport]:
        t_p = classify_reduction(curve, p, cache).t_p
        if p % 3 == 2:
            return [CongruenceReport("Cor34-a", key, p, 1, 0, 0, t_p)]
        reports = []
        for reading in readings:
            def B(m: int) -> int:
                return _binomial_family(m, 3, a, reading)

            reports.append(CongruenceReport("Cor34-b", key, p, 1, 1, p, t_p - B(p), reading))
            for n in range(1, n_max + 1, 3):
                reports.append(CongruenceReport("Cor34-c", key, p, n, 1, p, B(n * p) - B(n) * B(p), reading))
            for n, s in _graded_pairs(p, n_max, s_max):
                parallel = B(n // p) if n % p == 0 else 0
                residual = B(n * p) - t_p * B(n) + p * parallel
                reports.append(
                    CongruenceReport("Cor34-d", key, p, n, s, p ** s, residual, reading, note=condition_note)
                )
        return reports

    return _finish(_run_per_prime(check, primes, workers), "Cor34", curve)


def sec4_trace_sum(a3: int, a6: int, p: int) -> int:
    """
    sum_{k=floor((p-1)/6)}^{(p-1)/3} C((p-1)/3 + k, k) C(k, (p-1)/3 - k)
        a3^(2k - (p-1)/3) a6^((p-1)/3 - k)

    for p = 1 mod 3; this is b(p) of y^2 + a3 y = x^3 + a6.
    """
    if p % 3 != 1:
        raise ValueError(f"p = {p} is not 1 mod 3")
    q = (p - 1) // 3
    total = 0
    for k in range((p - 1) // 6, q + 1):
        weight = binomial(q + k, k) * binomial(k, q - k)
        if weight:
            total += weight * a3 ** (2 * k - q) * a6 ** (q - k)
    return total


def check_sec4_trace(
    a3: int,
    a6: int,
    p_max: int,
    cache: Optional["TraceCache"] = None,
    workers: int = 1,
) -> List[CongruenceReport]:
    """
    y^2 + a3 y = x^3 + a6 at good p: t_p = 0 exactly for p = 2 mod 3 and
    t_p = sec4_trace_sum mod p for p = 1 mod 3. With a3 = 0 the closed form
    C((p-1)/2, (p-1)/6) a6^((p-1)/6) is checked as well.
    """
    validate_bound(p_max, "p_max")
    curve = WeierstrassCurve(0, 0, a3, 0, a6)
    key = curve.coefficients
    local = local_data_sweep(curve, primerange(2, p_max + 1), cache=cache, workers=workers)
    reports = []
    for data in local:
        p = data.p
        if not data.reduction.is_good:
            continue
        if p % 3 == 2:
            reports.append(CongruenceReport("Sec4-trace", key, p, 1, 0, 0, data.t_p))
        elif p % 3 == 1:
            reports.append(CongruenceReport("Sec4-trace", key, p, 1, 1, p, data.t_p - sec4_trace_sum(a3, a6, p), "sum"))
            if a3 == 0:
                closed = comb((p - 1) // 2, (p - 1) // 6) * a6 ** ((p - 1) // 6)
                reports.append(CongruenceReport("Sec4-trace", key, p, 1, 1, p, data.t_p - closed, "a6-only"))
    return _finish(reports, "Sec4", curve)


def check_remark11(
    n_max: Optional[int],
    s_max: int,
    p_max: int = 13,
    expansion: Optional[Expansion] = None,
    eta: Optional[DirichletCoefficients] = None,
    workers: int = 1,
) -> List[CongruenceReport]:
    """
    b(np) - c_p b(n) + p b(n||p) = 0 mod p^s for p^(s-1) | n, p <= p_max,
    p != 11, with b from y^2 - y = x^3 - x^2 and c_p from the eta product.
    Without ``n_max`` each prime uses n <= 2p.
    """
    validate_bound(p_max, "p_max")
    validate_bound(s_max, "s_max")
    curve = LEVEL11_CURVE
    primes = [p for p in primerange(2, p_max + 1) if p != 11]
    if not primes:
        return []
    if eta is None:
        eta = eta_product_level11(p_max)
    elif eta.bound < max(primes):
        raise InsufficientOrder(f"eta coefficients stop at c_{eta.bound}, need c_{max(primes)}")

    def n_limit(p: int) -> int:
        return n_max if n_max is not None else 2 * p

    coeffs = _coefficients(curve, max(n_limit(p) * p for p in primes), expansion)

    def check(p: int) -> List[CongruenceReport]:
        c_p = eta[p]
        return [
            CongruenceReport(
                "Remark-11", curve.coefficients, p, n, s, p ** s,
                coeffs.at(n * p) - c_p * coeffs.at(n) + p * coeffs.parallel(n, p),
            )
            for n, s in _graded_pairs(p, n_limit(p), s_max)
        ]

    return _finish(_run_per_prime(check, primes, workers), "Remark-11", curve)
