"""
Truncated univariate power series with exact coefficients.

A series of order N stores the coefficients c_0 .. c_{N-1} of z^0 .. z^{N-1};
everything from z^N on is unknown. Binary operations on orders N1, N2 give
order min(N1, N2), so a result never claims more than its inputs determine.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Type, Union

from ..utils.exceptions import (
    BadConstantTerm,
    IntegralityViolation,
    NonzeroConstantTerm,
    NotReversible,
)

Coefficient = Union[int, Fraction]


def is_integer_value(value: Coefficient) -> bool:
    """True for ints and for Fractions with denominator 1."""
    if isinstance(value, Fraction):
        return value.denominator == 1
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class TruncatedSeries:
    """Common behaviour of integer and rational truncated series."""

    coeffs: Tuple[Coefficient, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs a positive order")

    @property
    def order(self) -> int:
        """Exclusive truncation bound N."""
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Coefficient:
        if n < 0:
            raise IndexError("negative exponent")
        return self.coeffs[n]

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient: Coefficient = 1) -> "TruncatedSeries":
        coeffs: List[Coefficient] = [0] * order
        if exponent < order:
            coeffs[exponent] = coefficient
        return cls(coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return type(self)(self.coeffs[:order])

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or the order if all are zero."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return self.order

    def shift_up(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k; the order grows by k."""
        return type(self)([0] * k + list(self.coeffs))

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Divide by z^k; the first k coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"series is not divisible by z^{k}")
        return type(self)(self.coeffs[k:])

    def is_integral(self) -> bool:
        return all(is_integer_value(c) for c in self.coeffs)

    def to_int(self) -> "TruncatedIntSeries":
        """Integer view of the series; raises IntegralityViolation otherwise."""
        values = []
        for n, c in enumerate(self.coeffs):
            if not is_integer_value(c):
                raise IntegralityViolation(f"coefficient of z^{n} is {c}")
            values.append(int(c))
        return TruncatedIntSeries(values)

    def to_rat(self) -> "TruncatedRatSeries":
        return TruncatedRatSeries(self.coeffs)

    def __neg__(self) -> "TruncatedSeries":
        return type(self)([-c for c in self.coeffs])

    def __add__(self, other: object) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        cls = _result_class(self, other)
        return cls([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other: object) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            cls = TruncatedRatSeries if isinstance(other, Fraction) else type(self)
            return cls([c * other for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other: object) -> "TruncatedSeries":
        return self.__mul__(other)

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(f"{c}")
            elif n == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"{type(self).__name__}({body} + O(z^{self.order}))"


@dataclass(frozen=True, repr=False)
class TruncatedIntSeries(TruncatedSeries):
    """Truncated series with integer coefficients."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for n, c in enumerate(self.coeffs):
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    continue
                raise TypeError(f"coefficient of z^{n} is not an integer: {c!r}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))


@dataclass(frozen=True, repr=False)
class TruncatedRatSeries(TruncatedSeries):
    """Truncated series with rational coefficients in lowest terms."""

    def __post_init__(self) -> None:
        super().__post_init__()
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))


def _result_class(*operands: TruncatedSeries) -> Type[TruncatedSeries]:
    if any(isinstance(s, TruncatedRatSeries) for s in operands):
        return TruncatedRatSeries
    return TruncatedIntSeries


def _convolve(a: Sequence[Coefficient], b: Sequence[Coefficient], order: int) -> List[Coefficient]:
    out: List[Coefficient] = [0] * order
    for i in range(min(order, len(a))):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(min(order - i, len(b))):
            bj = b[j]
            if bj != 0:
                out[i + j] += ai * bj
    return out


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to min(order a, order b)."""
    n = min(a.order, b.order)
    return _result_class(a, b)(_convolve(a.coeffs, b.coeffs, n))


def series_pow(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """Nonnegative integer power by repeated squaring."""
    if k < 0:
        raise ValueError("negative powers need series_reciprocal")
    result = type(f).one(f.order)
    base = f
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f(g(z)) truncated to min order, by Horner's rule."""
    if g.coeffs[0] != 0:
        raise NonzeroConstantTerm(f"inner series has constant term {g.coeffs[0]}")
    n = min(f.order, g.order)
    acc: List[Coefficient] = [0] * n
    for k in range(n - 1, -1, -1):
        acc = _convolve(acc, g.coeffs, n)
        acc[0] += f.coeffs[k]
    return _result_class(f, g)(acc)


def _unit_inverse(f: TruncatedSeries, value: Coefficient) -> Coefficient:
    if isinstance(f, TruncatedIntSeries):
        if value not in (1, -1):
            raise NotReversible(f"{value} is not a unit in the integers")
        return value
    if value == 0:
        raise NotReversible("zero is not invertible")
    return 1 / Fraction(value)


def series_reverse(f: TruncatedSeries) -> TruncatedSeries:
    """
    Compositional inverse h with f(h(z)) = z, solved degree by degree.

    Column n of the power table [z^n] h^k only needs h_1 .. h_{n-1}, so
    h_n = -(sum_{k>=2} f_k [z^n] h^k) / f_1 is fixed once the column is known.
    """
    if f.coeffs[0] != 0:
        raise NotReversible(f"constant term is {f.coeffs[0]}")
    n_max = f.order
    if n_max < 2:
        return type(f)([0] * n_max)
    inv = _unit_inverse(f, f.coeffs[1])
    c = f.coeffs

    h: List[Coefficient] = [0] * n_max
    h[1] = inv
    powers: List[List[Coefficient]] = [[], h] + [[0] * n_max for _ in range(2, n_max)]
    for n in range(2, n_max):
        excess: Coefficient = 0
        for k in range(2, n + 1):
            prev = powers[k - 1]
            acc: Coefficient = 0
            for i in range(1, n - k + 2):
                if h[i] != 0:
                    acc += h[i] * prev[n - i]
            powers[k][n] = acc
            if c[k] != 0:
                excess += c[k] * acc
        h[n] = -excess * inv
    return type(f)(h)


def series_reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """1/f; needs a unit constant term (+-1 for integer series)."""
    inv = _unit_inverse(f, f.coeffs[0])
    n_max = f.order
    g: List[Coefficient] = [0] * n_max
    g[0] = inv
    for n in range(1, n_max):
        acc: Coefficient = 0
        for k in range(1, n + 1):
            if f.coeffs[k] != 0:
                acc += f.coeffs[k] * g[n - k]
        g[n] = -acc * inv
    return type(f)(g)


def series_divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """a/b over the rationals (integer result only when b(0) = +-1)."""
    if b.coeffs[0] == 0:
        raise NotReversible("divisor has zero constant term")
    if isinstance(a, TruncatedIntSeries) and isinstance(b, TruncatedIntSeries) and b.coeffs[0] in (1, -1):
        return series_mul(a, series_reciprocal(b))
    return series_mul(a.to_rat(), series_reciprocal(b.to_rat()))


def exact_divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedIntSeries:
    """
    Integer long division a/b for integer series whose quotient is integral.

    Raises IntegralityViolation at the first inexact step.
    """
    a_int, b_int = a.to_int(), b.to_int()
    lead = b_int.coeffs[0]
    if lead == 0:
        raise NotReversible("divisor has zero constant term")
    n_max = min(a_int.order, b_int.order)
    q: List[int] = [0] * n_max
    for n in range(n_max):
        acc = a_int.coeffs[n]
        for k in range(1, n + 1):
            if b_int.coeffs[k]:
                acc -= b_int.coeffs[k] * q[n - k]
        quotient, remainder = divmod(acc, lead)
        if remainder:
            raise IntegralityViolation(f"quotient coefficient of z^{n} is {Fraction(acc, lead)}")
        q[n] = quotient
    return TruncatedIntSeries(q)


def series_rational_power(f: TruncatedSeries, exponent: Fraction) -> TruncatedRatSeries:
    """
    f^exponent for f(0) = 1 by the recurrence from f*g' = exponent*f'*g:
    n g_n = sum_{k=1}^{n} ((exponent + 1) k - n) f_k g_{n-k}.
    """
    if f.coeffs[0] != 1:
        raise BadConstantTerm(f"constant term is {f.coeffs[0]}, expected 1")
    alpha = Fraction(exponent)
    n_max = f.order
    g: List[Fraction] = [Fraction(0)] * n_max
    g[0] = Fraction(1)
    for n in range(1, n_max):
        acc = Fraction(0)
        for k in range(1, n + 1):
            fk = f.coeffs[k]
            if fk != 0:
                acc += ((alpha + 1) * k - n) * fk * g[n - k]
        g[n] = acc / n
    return TruncatedRatSeries(g)


def series_inv_sqrt(f: TruncatedSeries) -> TruncatedRatSeries:
    """1/sqrt(f) over the rationals, normalised by r(0) = 1."""
    return series_rational_power(f, Fraction(-1, 2))


def series_sqrt(f: TruncatedSeries) -> TruncatedRatSeries:
    """sqrt(f) = f * f^(-1/2)."""
    return TruncatedRatSeries(series_mul(f.to_rat(), series_inv_sqrt(f)).coeffs)


def series_integrate(f: TruncatedSeries) -> TruncatedRatSeries:
    """z^n -> z^(n+1)/(n+1), zero constant term; the order grows by one."""
    return TruncatedRatSeries([0] + [Fraction(c) / (n + 1) for n, c in enumerate(f.coeffs)])


def series_differentiate(f: TruncatedSeries) -> TruncatedSeries:
    """z^n -> n z^(n-1); the order drops by one."""
    if f.order < 2:
        raise ValueError("differentiating a series of order 1 leaves nothing known")
    return type(f)([n * f.coeffs[n] for n in range(1, f.order)])


def lagrange_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """
    Compositional inverse by the Lagrange formula.

    Writing f = u/phi(u) with phi = u/f, the inverse h satisfies
    [z^n] h = (1/n) [u^(n-1)] phi(u)^n. Independent of series_reverse.
    """
    if f.coeffs[0] != 0:
        raise NotReversible(f"constant term is {f.coeffs[0]}")
    n_max = f.order
    if n_max < 2:
        return type(f)([0] * n_max)
    _unit_inverse(f, f.coeffs[1])
    quotient = TruncatedRatSeries(f.coeffs[1:])
    phi = series_reciprocal(quotient)
    values: List[Fraction] = [Fraction(0)] * n_max
    power = TruncatedRatSeries.one(phi.order)
    for n in range(1, n_max):
        power = series_mul(power, phi)
        values[n] = Fraction(power.coeffs[n - 1]) / n
    result = TruncatedRatSeries(values)
    if isinstance(f, TruncatedIntSeries):
        return result.to_int()
    return result
