"""
Integral Weierstrass equations y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
"""
import json
from dataclasses import dataclass, field
from typing import Tuple

from ..utils.exceptions import CurveParseError, SingularCurveError


def b_invariants(a1: int, a2: int, a3: int, a4: int, a6: int) -> Tuple[int, int, int, int]:
    """The quantities b2, b4, b6, b8 of the equation."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def discriminant_of(a1: int, a2: int, a3: int, a4: int, a6: int) -> int:
    b2, b4, b6, b8 = b_invariants(a1, a2, a3, a4, a6)
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


@dataclass(frozen=True)
class WeierstrassCurve:
    """
    An elliptic curve over Q given by an integral Weierstrass equation.

    The discriminant is computed once at construction; a zero discriminant
    is rejected with SingularCurveError.
    """
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    discriminant: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4", "a6"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        delta = discriminant_of(*self.coefficients)
        if delta == 0:
            raise SingularCurveError(f"curve {self} is singular (discriminant 0)")
        object.__setattr__(self, "discriminant", delta)

    @classmethod
    def from_coefficients(cls, coefficients: Tuple[int, ...]) -> "WeierstrassCurve":
        if len(coefficients) != 5:
            raise CurveParseError(f"expected 5 coefficients [a1,a2,a3,a4,a6], got {len(coefficients)}")
        return cls(*coefficients)

    @property
    def coefficients(self) -> Tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self) -> Tuple[int, int, int, int]:
        return b_invariants(*self.coefficients)

    @property
    def key(self) -> str:
        """Cache key form 'a1,a2,a3,a4,a6'."""
        return ",".join(str(a) for a in self.coefficients)

    @property
    def is_family1(self) -> bool:
        """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x."""
        return self.a6 == 0

    @property
    def is_family2(self) -> bool:
        """y^2 + a3 y = x^3 + a6."""
        return self.a1 == 0 and self.a2 == 0 and self.a4 == 0

    def verify_discriminant(self) -> bool:
        return discriminant_of(*self.coefficients) == self.discriminant

    def equation(self, x: int, y: int) -> int:
        """Left minus right side of the equation at (x, y)."""
        a1, a2, a3, a4, a6 = self.coefficients
        return y * y + a1 * x * y + a3 * y - (x ** 3 + a2 * x * x + a4 * x + a6)

    def partial_x(self, x: int, y: int) -> int:
        return self.a1 * y - 3 * x * x - 2 * self.a2 * x - self.a4

    def partial_y(self, x: int, y: int) -> int:
        return 2 * y + self.a1 * x + self.a3

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.coefficients) + "]"

    def describe(self) -> str:
        """Human readable equation."""
        lhs = ["y^2"]
        for coeff, mono in ((self.a1, "xy"), (self.a3, "y")):
            if coeff:
                lhs.append(_signed(coeff, mono))
        rhs = ["x^3"]
        for coeff, mono in ((self.a2, "x^2"), (self.a4, "x"), (self.a6, "")):
            if coeff:
                rhs.append(_signed(coeff, mono))
        return " ".join(lhs) + " = " + " ".join(rhs)


def _signed(coeff: int, monomial: str) -> str:
    sign = "-" if coeff < 0 else "+"
    magnitude = abs(coeff)
    if monomial and magnitude == 1:
        return f"{sign} {monomial}"
    return f"{sign} {magnitude}{monomial}"


def discriminant(curve: WeierstrassCurve) -> int:
    """Delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6."""
    return discriminant_of(*curve.coefficients)


def parse_curve(text: str) -> WeierstrassCurve:
    """
    Parse the text form '[a1,a2,a3,a4,a6]'.

    Raises:
        CurveParseError: if the text is not a list of five integers
        SingularCurveError: if the equation is singular
    """
    try:
        values = json.loads(text.strip())
    except (json.JSONDecodeError, AttributeError) as e:
        raise CurveParseError(f"cannot parse curve {text!r}: {e}") from e
    if not isinstance(values, list) or len(values) != 5:
        raise CurveParseError(f"curve must be a list [a1,a2,a3,a4,a6], got {text!r}")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise CurveParseError(f"curve coefficients must be integers, got {text!r}")
    return WeierstrassCurve(*values)
