"""
Small exact polynomials: dense univariate and sparse bivariate.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

Number = Union[int, Fraction]


def _normalise(value: Number) -> Number:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


@dataclass(frozen=True)
class Polynomial:
    """
    Dense polynomial c_0 + c_1 x + ... with trailing zeros trimmed.

    The zero polynomial has no coefficients and degree -1.
    """
    coeffs: Tuple[Number, ...]

    def __post_init__(self) -> None:
        values = [_normalise(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def from_terms(cls, terms: Dict[int, Number]) -> "Polynomial":
        degree = max(terms, default=-1)
        values: list = [0] * (degree + 1)
        for exponent, value in terms.items():
            values[exponent] += value
        return cls(tuple(values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, exponent: int) -> Number:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def evaluate(self, x: Number) -> Number:
        """Horner evaluation, exact for int and Fraction arguments."""
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _normalise(acc)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out: list = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def scale(self, factor: Number) -> "Polynomial":
        return Polynomial(tuple(c * factor for c in self.coeffs))

    def __str__(self) -> str:
        terms = [f"{c}*x^{n}" for n, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) or "0"


class BivariatePolynomial:
    """Sparse polynomial sum c_(i,j) x^i y^j."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Tuple[int, int], Number]) -> None:
        self._terms = {k: _normalise(v) for k, v in terms.items() if v != 0}

    @property
    def terms(self) -> Dict[Tuple[int, int], Number]:
        return dict(self._terms)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def __getitem__(self, key: Tuple[int, int]) -> Number:
        return self._terms.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self._terms.items()))
        return f"BivariatePolynomial({body or '0'})"

    def evaluate(self, x: Number, y: Number) -> Number:
        total: Number = 0
        for (i, j), c in self._terms.items():
            total += c * x ** i * y ** j
        return _normalise(total)

    def items(self) -> Iterable[Tuple[Tuple[int, int], Number]]:
        return sorted(self._terms.items())
