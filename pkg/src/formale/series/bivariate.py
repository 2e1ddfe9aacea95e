"""
Exact series in two variables X, Y truncated at a total degree bound D.

Only monomials X^i Y^j with i + j < D are known; absent keys are zero.
"""
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..utils.exceptions import IntegralityViolation, NonzeroConstantTerm
from .univariate import (
    Coefficient,
    TruncatedRatSeries,
    TruncatedSeries,
    _convolve,
    _result_class,
    is_integer_value,
)

Exponent = Tuple[int, int]


class BivariateSeries:
    """Immutable truncated series sum c_(i,j) X^i Y^j."""

    __slots__ = ("_coeffs", "_bound")

    def __init__(self, coeffs: Mapping[Exponent, Coefficient], total_degree_bound: int) -> None:
        if total_degree_bound < 1:
            raise ValueError("total degree bound must be positive")
        cleaned: Dict[Exponent, Coefficient] = {}
        for (i, j), value in coeffs.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            if i + j >= total_degree_bound:
                raise ValueError(f"monomial {(i, j)} exceeds total degree bound {total_degree_bound}")
            if value != 0:
                cleaned[(i, j)] = value
        self._coeffs = cleaned
        self._bound = total_degree_bound

    @classmethod
    def _trusted(cls, coeffs: Dict[Exponent, Coefficient], bound: int) -> "BivariateSeries":
        series = cls.__new__(cls)
        series._coeffs = {k: v for k, v in coeffs.items() if v != 0}
        series._bound = bound
        return series

    @property
    def total_degree_bound(self) -> int:
        return self._bound

    @property
    def coeffs(self) -> Mapping[Exponent, Coefficient]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, key: Exponent) -> Coefficient:
        i, j = key
        if i + j >= self._bound:
            raise IndexError(f"monomial {key} is beyond the truncation bound {self._bound}")
        return self._coeffs.get(key, 0)

    def __iter__(self) -> Iterator[Tuple[Exponent, Coefficient]]:
        return iter(sorted(self._coeffs.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._bound == other._bound and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._bound, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*X^{i}*Y^{j}" for (i, j), c in self)
        return f"BivariateSeries({terms or '0'} + O(deg {self._bound}))"

    @classmethod
    def variable(cls, name: str, bound: int) -> "BivariateSeries":
        key = {"X": (1, 0), "Y": (0, 1)}[name]
        return cls({key: 1} if bound > 1 else {}, bound)

    @classmethod
    def from_univariate(cls, f: TruncatedSeries, variable: str, bound: Optional[int] = None) -> "BivariateSeries":
        """f(X) or f(Y) as a bivariate series."""
        d = min(f.order, bound) if bound is not None else f.order
        if variable == "X":
            return cls._trusted({(n, 0): f.coeffs[n] for n in range(d)}, d)
        if variable == "Y":
            return cls._trusted({(0, n): f.coeffs[n] for n in range(d)}, d)
        raise ValueError(f"unknown variable {variable!r}")

    def truncate(self, bound: int) -> "BivariateSeries":
        if bound > self._bound:
            raise ValueError("cannot extend a truncated series")
        return BivariateSeries._trusted(
            {k: v for k, v in self._coeffs.items() if k[0] + k[1] < bound}, bound
        )

    def homogeneous_part(self, degree: int) -> Dict[Exponent, Coefficient]:
        return {k: v for k, v in self._coeffs.items() if k[0] + k[1] == degree}

    def swap(self) -> "BivariateSeries":
        """F(Y, X)."""
        return BivariateSeries._trusted({(j, i): v for (i, j), v in self._coeffs.items()}, self._bound)

    def is_integral(self) -> bool:
        return all(is_integer_value(v) for v in self._coeffs.values())

    def to_integral(self) -> "BivariateSeries":
        out: Dict[Exponent, Coefficient] = {}
        for key, value in self._coeffs.items():
            if not is_integer_value(value):
                raise IntegralityViolation(f"coefficient of X^{key[0]} Y^{key[1]} is {value}")
            out[key] = int(value)
        return BivariateSeries._trusted(out, self._bound)

    def non_integral_terms(self) -> List[Tuple[Exponent, Coefficient]]:
        return sorted((k, v) for k, v in self._coeffs.items() if not is_integer_value(v))

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries._trusted({k: -v for k, v in self._coeffs.items()}, self._bound)

    def __add__(self, other: object) -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        bound = min(self._bound, other._bound)
        out: Dict[Exponent, Coefficient] = {}
        for source in (self._coeffs, other._coeffs):
            for (i, j), v in source.items():
                if i + j < bound:
                    out[(i, j)] = out.get((i, j), 0) + v
        return BivariateSeries._trusted(out, bound)

    def __sub__(self, other: object) -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "BivariateSeries":
        if isinstance(other, BivariateSeries):
            bound = min(self._bound, other._bound)
            out: Dict[Exponent, Coefficient] = {}
            right = list(other._coeffs.items())
            for (i, j), a in self._coeffs.items():
                if i + j >= bound:
                    continue
                for (k, l), b in right:
                    if i + j + k + l < bound:
                        key = (i + k, j + l)
                        out[key] = out.get(key, 0) + a * b
            return BivariateSeries._trusted(out, bound)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return BivariateSeries._trusted({k: v * other for k, v in self._coeffs.items()}, self._bound)
        return NotImplemented

    def __rmul__(self, other: object) -> "BivariateSeries":
        return self.__mul__(other)

    def constant_term(self) -> Coefficient:
        return self._coeffs.get((0, 0), 0)

    def restrict_x(self) -> List[Coefficient]:
        """Coefficients of F(X, 0)."""
        return [self._coeffs.get((n, 0), 0) for n in range(self._bound)]

    def restrict_y(self) -> List[Coefficient]:
        """Coefficients of F(0, Y)."""
        return [self._coeffs.get((0, n), 0) for n in range(self._bound)]

    def substitute(self, u: "BivariateSeries", v: "BivariateSeries") -> "BivariateSeries":
        """F(u(X,Y), v(X,Y)) for u, v without constant term."""
        if u.constant_term() != 0 or v.constant_term() != 0:
            raise NonzeroConstantTerm("substituted series must vanish at the origin")
        bound = min(self._bound, u._bound, v._bound)
        one = BivariateSeries._trusted({(0, 0): 1}, bound)
        max_i = max((i for i, _ in self._coeffs), default=0)
        max_j = max((j for _, j in self._coeffs), default=0)
        u_pows = [one]
        for _ in range(min(max_i, bound - 1)):
            u_pows.append(u_pows[-1] * u)
        v_pows = [one]
        for _ in range(min(max_j, bound - 1)):
            v_pows.append(v_pows[-1] * v)
        total = BivariateSeries._trusted({}, bound)
        for (i, j), c in self._coeffs.items():
            if i + j >= bound:
                continue
            total = total + (u_pows[i] * v_pows[j]) * c
        return total

    def evaluate_univariate(self, u: TruncatedSeries, v: TruncatedSeries) -> TruncatedSeries:
        """F(u(z), v(z)) for univariate u, v without constant term."""
        if u.coeffs[0] != 0 or v.coeffs[0] != 0:
            raise NonzeroConstantTerm("substituted series must vanish at the origin")
        order = min(self._bound, u.order, v.order)
        cls = _result_class(u, v)
        if any(isinstance(c, Fraction) for c in self._coeffs.values()):
            cls = TruncatedRatSeries
        one: List[Coefficient] = [1] + [0] * (order - 1)
        u_pows = [one]
        v_pows = [one]
        for _ in range(order - 1):
            u_pows.append(_convolve(u_pows[-1], u.coeffs, order))
            v_pows.append(_convolve(v_pows[-1], v.coeffs, order))
        acc: List[Coefficient] = [0] * order
        for (i, j), c in self._coeffs.items():
            if i + j >= order:
                continue
            term = _convolve(u_pows[i], v_pows[j], order)
            for n in range(order):
                if term[n] != 0:
                    acc[n] += c * term[n]
        return cls(acc)


def compose_bivariate(f: TruncatedSeries, inner: BivariateSeries) -> BivariateSeries:
    """f(B(X, Y)) by Horner's rule, truncated at min(order f, bound B)."""
    if inner.constant_term() != 0:
        raise NonzeroConstantTerm(f"inner series has constant term {inner.constant_term()}")
    bound = min(f.order, inner.total_degree_bound)
    acc = BivariateSeries._trusted({}, bound)
    for k in range(bound - 1, -1, -1):
        acc = acc * inner
        if f.coeffs[k] != 0:
            acc = acc + BivariateSeries._trusted({(0, 0): f.coeffs[k]}, bound)
    return acc
