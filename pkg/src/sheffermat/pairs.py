"""The (l, h) pair that indexes a Sheffer sequence.

l must be an invertible series (nonzero constant term) and h a delta
series (h(0) = 0, h'(0) != 0), both truncated at the same order and with
rational coefficients.  The pair is validated once at construction; all
sequence and identity code downstream can then assume it is well formed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NotDeltaSeriesError,
    NotInvertibleError,
    OrderMismatchError,
)
from .polynomials import Poly
from .series import TruncatedSeries


@dataclass(frozen=True)
class ShefferPair:
    l: TruncatedSeries
    h: TruncatedSeries

    def __post_init__(self) -> None:
        if self.l.order != self.h.order:
            raise OrderMismatchError(
                f"l has order {self.l.order} but h has order {self.h.order}"
            )
        if any(isinstance(c, Poly) for c in self.l.coeffs + self.h.coeffs):
            raise TypeError("pair series must have rational coefficients")
        if not self.l.is_invertible:
            raise NotInvertibleError("l must have a nonzero constant term")
        if not self.h.is_delta:
            raise NotDeltaSeriesError("h must satisfy h(0) = 0 and h'(0) != 0")

    @property
    def order(self) -> int:
        return self.l.order

    def truncate(self, order: int) -> ShefferPair:
        return ShefferPair(self.l.truncate(order), self.h.truncate(order))

    def h_inverse(self) -> TruncatedSeries:
        """The compositional inverse of h, at the pair's order."""
        return self.h.compositional_inverse()

    @classmethod
    def appell(cls, l: TruncatedSeries) -> ShefferPair:
        """The Appell pair (l, y)."""
        return cls(l, TruncatedSeries.identity(l.order))

    @classmethod
    def associated(cls, h: TruncatedSeries) -> ShefferPair:
        """The associated pair (1, h)."""
        return cls(TruncatedSeries.constant(Fraction(1), h.order), h)
