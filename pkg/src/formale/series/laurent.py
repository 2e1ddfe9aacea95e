"""
Laurent series with a bounded pole: z^(-pole_order) * regular(z).
"""
from dataclasses import dataclass

from .univariate import Coefficient, TruncatedSeries, series_mul


@dataclass(frozen=True)
class LaurentSeries:
    pole_order: int
    regular: TruncatedSeries

    @property
    def precision(self) -> int:
        """Exponent of the first unknown coefficient."""
        return self.regular.order - self.pole_order

    def coefficient(self, exponent: int) -> Coefficient:
        index = exponent + self.pole_order
        if index >= self.regular.order:
            raise IndexError(f"z^{exponent} is beyond the precision z^{self.precision}")
        if index < 0:
            return 0
        return self.regular[index]

    def _aligned(self, pole_order: int) -> TruncatedSeries:
        return self.regular.shift_up(pole_order - self.pole_order)

    def __add__(self, other: object) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        pole = max(self.pole_order, other.pole_order)
        return LaurentSeries(pole, self._aligned(pole) + other._aligned(pole))

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.pole_order, -self.regular)

    def __sub__(self, other: object) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return LaurentSeries(self.pole_order + other.pole_order, series_mul(self.regular, other.regular))
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentSeries(self.pole_order, self.regular * other)
        return NotImplemented

    def __rmul__(self, other: object) -> "LaurentSeries":
        return self.__mul__(other)

    def known_coefficients(self) -> dict:
        """Exponent -> coefficient for every known, nonzero coefficient."""
        return {
            n - self.pole_order: c
            for n, c in enumerate(self.regular.coeffs)
            if c != 0
        }
