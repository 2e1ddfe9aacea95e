"""
Closed coefficient formulas for the invariant differential and w(z).

Conventions for every sum here: C(a, b) = 0 for b < 0, and for 0 <= a < b;
a negative upper index is the generalised binomial, so
(-1)^k C(-n, k) = C(n + k - 1, k). 0^0 = 1. Whenever the binomial factors
of a term are nonzero its exponents are nonnegative, and this is checked.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional

from ..utils.logging import get_logger, log_with_context
from .polynomials import BivariatePolynomial, Polynomial

logger = get_logger(__name__)


def binomial(a: int, b: int) -> int:
    """C(a, b) with the conventions of this module."""
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b) if b <= a else 0
    return (-1) ** b * comb(b - a - 1, b)


def _power(base: int, exponent: int) -> int:
    if exponent < 0:
        raise ArithmeticError(f"negative exponent {exponent} on a term with nonzero binomials")
    return base ** exponent


def legendre(n: int) -> Polynomial:
    """P_n(x) = 2^-n sum_k (-1)^k C(n,k) C(2n-2k, n) x^(n-2k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms = {
        n - 2 * k: Fraction((-1) ** k * comb(n, k) * comb(2 * n - 2 * k, n), 2 ** n)
        for k in range(n // 2 + 1)
    }
    return Polynomial.from_terms(terms)


def central_trinomial(n: int) -> BivariatePolynomial:
    """T_n(x, y) = [t^n] (t^2 + x t + y)^n = sum_k C(n,k) C(n-k,k) x^(n-2k) y^k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return BivariatePolynomial(
        {(n - 2 * k, k): comb(n, k) * comb(n - k, k) for k in range(n // 2 + 1)}
    )


def homogenized_legendre(n: int) -> BivariatePolynomial:
    """
    d^n P_n(x/d) written in x and d2 = d^2.

    Only even powers of d occur, so this is a polynomial in (x, d2); at
    d2 = x^2 - 4y it equals T_n(x, y) whether or not d2 is a square.
    """
    p = legendre(n)
    return BivariatePolynomial({(n - 2 * k, k): p[n - 2 * k] for k in range(n // 2 + 1)})


def b_closed_family1(a1: int, a2: int, a3: int, a4: int, n: int) -> int:
    """
    b(n + 1), the coefficient of z^n in omega for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x:

        sum_{m=floor(n/2)}^{n} sum_{k=0}^{floor(m/2)} sum_{r}
            C(m,k) C(m-k,k) C(m-2k,r) C(k, n-m-k-r)
            a1^(m-2k-r) a2^r a3^(2k-n+m+r) a4^(n-m-k-r)

    r runs over 0 .. n-m-k; only n-m-2k <= r <= m-2k can contribute.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for m in range(n // 2, n + 1):
        for k in range(m // 2 + 1):
            outer = comb(m, k) * comb(m - k, k)
            r_low = max(0, n - m - 2 * k)
            r_high = min(n - m - k, m - 2 * k)
            for r in range(r_low, r_high + 1):
                j = n - m - k - r
                weight = outer * comb(m - 2 * k, r) * comb(k, j)
                if weight == 0:
                    continue
                total += (
                    weight
                    * _power(a1, m - 2 * k - r)
                    * _power(a2, r)
                    * _power(a3, 2 * k - n + m + r)
                    * _power(a4, j)
                )
    return total


def b_closed_family2(a3: int, a6: int, n: int) -> int:
    """
    Coefficient of z^(3n-3) in omega for y^2 + a3 y = x^3 + a6:

        sum_k C(n+k-1, k) C(k, n-k-1) a3^(2k-n+1) a6^(n-k-1)

    Every other coefficient of omega vanishes for this family.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(
        binomial(n + k - 1, k) * binomial(k, n - k - 1)
        * _power(a3, 2 * k - n + 1) * _power(a6, n - k - 1)
        for k in range(n // 2, n)
    )


def w_coeff_family2(a3: int, a6: int, n: int) -> Fraction:
    """
    s_(3n) of w(z) for y^2 + a3 y = x^3 + a6 by Lagrange inversion in v = z^3:

        (1/n) sum_k C(n+k-1, k) C(k, n-k-1) a3^(2k-n+1) a6^(n-1-k)

    Always an integer; returned as a Fraction so callers can check that.
    """
    return Fraction(b_closed_family2(a3, a6, n), n)


def tate_remark_b(b: int, c: int, n: int) -> int:
    """
    The printed double sum for y^2 + (1-c) xy - b y = x^3 - b x^2:

        sum_{m=0}^{n-1} sum_{k=0}^{floor(m/2)}
            C(m,k) C(m-k,k) C(m-2k, n-m-k-1) (1-c)^(2m-n-k+1) (-b)^(n-m-1)

    Not trusted on its own; compare_tate_remark checks it against
    b_closed_family1(1 - c, -b, -b, 0, n - 1).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    total = 0
    for m in range(n):
        for k in range(m // 2 + 1):
            weight = comb(m, k) * comb(m - k, k) * binomial(m - 2 * k, n - m - k - 1)
            if weight:
                total += weight * _power(1 - c, 2 * m - n - k + 1) * _power(-b, n - m - 1)
    return total


def tate_remark_b_specialized(n: int) -> int:
    """
    The printed b = c = 1 sum, which drops the (1-c) power:

        sum_{m=0}^{n-1} sum_{k=0}^{floor(m/2)} (-1)^(n-m-1) C(m,k) C(m-k,k) C(m-2k, n-m-k-1)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(
        (-1) ** (n - m - 1) * comb(m, k) * comb(m - k, k) * binomial(m - 2 * k, n - m - k - 1)
        for m in range(n)
        for k in range(m // 2 + 1)
    )


@dataclass(frozen=True)
class RemarkComparison:
    """One index where a printed sum and the authoritative value were compared."""
    n: int
    printed: int
    expected: int
    formula: str

    @property
    def agrees(self) -> bool:
        return self.printed == self.expected

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "formula": self.formula,
            "printed": str(self.printed),
            "expected": str(self.expected),
            "agrees": self.agrees,
        }


def compare_tate_remark(
    n_max: int,
    b: int = 1,
    c: int = 1,
    expected: Optional[List[int]] = None,
) -> List[RemarkComparison]:
    """
    Compare both printed sums with the authoritative b(n), n = 1 .. n_max.

    ``expected`` may carry b(1) .. b(n_max) from a generic expansion;
    otherwise b_closed_family1 supplies them. The specialised sum is only
    compared when b = c = 1.
    """
    rows: List[RemarkComparison] = []
    for n in range(1, n_max + 1):
        value = expected[n - 1] if expected is not None else b_closed_family1(1 - c, -b, -b, 0, n - 1)
        rows.append(RemarkComparison(n, tate_remark_b(b, c, n), value, "general"))
        if b == 1 and c == 1:
            rows.append(RemarkComparison(n, tate_remark_b_specialized(n), value, "specialized"))
    mismatches = [row for row in rows if not row.agrees]
    if mismatches:
        first = mismatches[0]
        logger.warning(
            "Printed coefficient sum disagrees with the expansion",
            **log_with_context(formula=first.formula, n=first.n, printed=first.printed, expected=first.expected)
        )
    return rows
