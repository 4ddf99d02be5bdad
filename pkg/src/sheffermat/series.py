"""Truncated formal power series in y over an exact coefficient ring.

A :class:`TruncatedSeries` of order n stores the n+1 coefficients of
y^0 .. y^n; every operation is exact modulo y^(n+1) and makes no claim
beyond the truncation order.  Two coefficient rings are supported: the
rationals (:class:`fractions.Fraction`) and :class:`~sheffermat.polynomials.Poly`,
so a series can carry plain Taylor coefficients or polynomial-valued
ones such as the expansion of exp(x*y).

Binary operations require equal orders; mixing orders is a loud
:class:`OrderMismatchError`, never a silent truncation.  Use
:meth:`TruncatedSeries.truncate` for deliberate order reduction.

Beyond the ring operations the module provides the pieces of series
calculus needed downstream: derivative, reciprocal of an invertible
series, composition with a delta series (zero constant term, nonzero
linear term), compositional inverse of a delta series, and the
exponential of a series with zero constant term.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Union

from .errors import (
    InsufficientOrderError,
    NotDeltaSeriesError,
    NotInvertibleError,
    OrderMismatchError,
)
from .polynomials import Poly
from .rationals import format_rational, rat

Coefficient = Union[Fraction, Poly]


def _zero_like(sample: Coefficient) -> Coefficient:
    return Poly.zero() if isinstance(sample, Poly) else Fraction(0)


def _one_like(sample: Coefficient) -> Coefficient:
    return Poly.one() if isinstance(sample, Poly) else Fraction(1)


class TruncatedSeries:
    """A power series in y truncated at a fixed order, with exact coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient], order: int | None = None):
        items = [
            c if isinstance(c, (Fraction, Poly)) else rat(c) for c in coeffs
        ]
        if not items:
            raise ValueError("a truncated series needs at least a constant term")
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(items) > order + 1:
                raise ValueError(
                    f"{len(items)} coefficients exceed order {order}; "
                    "truncate explicitly instead"
                )
            zero = _zero_like(items[0])
            items.extend([zero] * (order + 1 - len(items)))
        self._coeffs = tuple(items)

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rationals(
        cls, coeffs: Iterable[Fraction | int | str], order: int | None = None
    ) -> TruncatedSeries:
        """Build a rational-coefficient series, coercing ints and 'p/q' strings."""
        items = [rat(c) for c in coeffs]
        if not items:
            items = [Fraction(0)]
        return cls(items, order)

    @classmethod
    def constant(cls, value: Coefficient, order: int) -> TruncatedSeries:
        return cls([value], order)

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        """The series y (the identity delta series) at the given order."""
        if order < 1:
            raise ValueError("the identity series needs order >= 1")
        return cls([Fraction(0), Fraction(1)], order)

    # -- structure --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Coefficient, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def constant_term(self) -> Coefficient:
        return self._coeffs[0]

    @property
    def is_delta(self) -> bool:
        """True iff f(0) = 0 and f'(0) != 0."""
        zero = _zero_like(self._coeffs[0])
        return (
            self.order >= 1
            and self._coeffs[0] == zero
            and self._coeffs[1] != zero
        )

    @property
    def is_invertible(self) -> bool:
        """True iff the constant term is nonzero."""
        return self._coeffs[0] != _zero_like(self._coeffs[0])

    def __iter__(self) -> Iterator[Coefficient]:
        return iter(self._coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        """Drop coefficients above ``order`` (which must not exceed self.order)."""
        if order < 0:
            raise ValueError("order must be >= 0")
        if order > self.order:
            raise InsufficientOrderError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return TruncatedSeries(self._coeffs[: order + 1])

    def map_coefficients(self, fn: Callable[[Coefficient], Coefficient]) -> TruncatedSeries:
        """Apply ``fn`` to every coefficient (e.g. lifting into another ring)."""
        return TruncatedSeries([fn(c) for c in self._coeffs])

    def _require_same_order(self, other: TruncatedSeries, op: str) -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"{op}: orders differ ({self.order} vs {other.order})"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other, "add")
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other, "subtract")
        return TruncatedSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs])

    def __mul__(self, other: TruncatedSeries | Coefficient | int) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other, "multiply")
            n = self.order
            zero = _zero_like(self._coeffs[0]) * _zero_like(other._coeffs[0])
            out = [zero] * (n + 1)
            for i, a in enumerate(self._coeffs):
                if a == _zero_like(a):
                    continue
                for j in range(n + 1 - i):
                    out[i + j] = out[i + j] + a * other._coeffs[j]
            return TruncatedSeries(out)
        if isinstance(other, (Fraction, int, Poly)):
            return TruncatedSeries([c * other for c in self._coeffs])
        return NotImplemented

    def __rmul__(self, other: Coefficient | int) -> TruncatedSeries:
        if isinstance(other, (Fraction, int, Poly)):
            return TruncatedSeries([other * c for c in self._coeffs])
        return NotImplemented

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.reciprocal()

    def _add_constant(self, value: Coefficient) -> TruncatedSeries:
        return TruncatedSeries(
            (self._coeffs[0] + value,) + self._coeffs[1:]
        )

    # -- calculus -----------------------------------------------------------

    def derivative(self) -> TruncatedSeries:
        """Term-wise d/dy; the result's order is one lower."""
        if self.order == 0:
            raise InsufficientOrderError(
                "cannot differentiate a series of order 0"
            )
        return TruncatedSeries(
            [self._coeffs[k] * k for k in range(1, self.order + 1)]
        )

    def reciprocal(self) -> TruncatedSeries:
        """Multiplicative inverse: self * result = 1 modulo y^(order+1).

        The constant term must be a nonzero rational.
        """
        c0 = self._coeffs[0]
        if not isinstance(c0, Fraction):
            raise NotInvertibleError(
                "reciprocal is defined for rational-coefficient series only"
            )
        if c0 == 0:
            raise NotInvertibleError("series with zero constant term has no reciprocal")
        inv0 = Fraction(1) / c0
        out: list[Fraction] = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += self._coeffs[i] * out[n - i]
            out.append(-inv0 * acc)
        return TruncatedSeries(out)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner(y)) truncated at the shared order.

        ``inner`` must be a delta series of the same order; the zero
        constant term is what makes the truncated composition exact.
        """
        if not isinstance(inner, TruncatedSeries):
            raise TypeError("compose expects a TruncatedSeries")
        self._require_same_order(inner, "compose")
        if not inner.is_delta:
            raise NotDeltaSeriesError("composition requires a delta series inner factor")
        n = self.order
        g = inner
        if isinstance(self._coeffs[0], Poly) and isinstance(inner._coeffs[0], Fraction):
            g = lift(inner)
        # Horner in the series ring: f0 + g*(f1 + g*(f2 + ...))
        result = TruncatedSeries.constant(self._coeffs[n], n)
        for k in range(n - 1, -1, -1):
            result = (result * g)._add_constant(self._coeffs[k])
        return result

    def compositional_inverse(self) -> TruncatedSeries:
        """The delta series g with self(g(y)) = y modulo y^(order+1).

        Coefficients are determined order by order: once g is known
        through y^(m-1), the y^m coefficient of self(g) is linear in
        g_m with slope f'(0).
        """
        if not self.is_delta:
            raise NotDeltaSeriesError("only a delta series has a compositional inverse")
        if not isinstance(self._coeffs[0], Fraction):
            raise NotDeltaSeriesError(
                "compositional inverse is defined for rational-coefficient series only"
            )
        n = self.order
        h1 = self._coeffs[1]
        g = [Fraction(0)] * (n + 1)
        g[1] = Fraction(1) / h1
        for m in range(2, n + 1):
            trial = TruncatedSeries(g[: m + 1])
            residue = self.truncate(m).compose(trial).coeffs[m]
            g[m] = -residue / h1
        inverse = TruncatedSeries(g)
        assert self.compose(inverse).coeffs == TruncatedSeries.identity(n).coeffs, (
            "compositional inverse failed its defining relation"
        )
        return inverse

    def exp(self) -> TruncatedSeries:
        """exp(self) = sum self^k / k!, requiring a zero constant term.

        Works over both coefficient rings; over Poly it yields series
        such as the expansion of exp(x*y).
        """
        zero = _zero_like(self._coeffs[0])
        if self._coeffs[0] != zero:
            raise NotDeltaSeriesError(
                "exp of a truncated series requires a zero constant term"
            )
        n = self.order
        one = _one_like(self._coeffs[0])
        # Horner: 1 + g/1*(1 + g/2*(1 + ... (1 + g/n)))
        result = TruncatedSeries.constant(one, n)
        for k in range(n, 0, -1):
            result = (result * self * Fraction(1, k))._add_constant(one)
        return result

    def derivatives_at_zero(self) -> tuple[Coefficient, ...]:
        """The vector [f(0), f'(0), ..., f^(order)(0)], i.e. k! * coeffs[k]."""
        return tuple(c * math.factorial(k) for k, c in enumerate(self._coeffs))

    # -- identity -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("TruncatedSeries", self._coeffs))

    # -- text and wire form -----------------------------------------------------

    def to_json(self) -> dict:
        """JSON form: {"order": n, "coeffs": [...]}, ascending powers of y.

        Rational coefficients serialize as "p/q" strings, polynomial
        coefficients as arrays of such strings.
        """
        coeffs: list = []
        for c in self._coeffs:
            coeffs.append(c.to_strings() if isinstance(c, Poly) else format_rational(c))
        return {"order": self.order, "coeffs": coeffs}

    @classmethod
    def from_json(cls, data: dict) -> TruncatedSeries:
        coeffs: list[Coefficient] = []
        for c in data["coeffs"]:
            coeffs.append(Poly.from_strings(c) if isinstance(c, list) else rat(c))
        series = cls(coeffs)
        if series.order != data["order"]:
            raise ValueError("order field disagrees with coefficient count")
        return series

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r})"


def lift(series: TruncatedSeries) -> TruncatedSeries:
    """Lift a rational-coefficient series into the polynomial ring
    (each coefficient becomes a constant polynomial)."""
    return series.map_coefficients(
        lambda c: c if isinstance(c, Poly) else Poly.constant(c)
    )


def x_multiple(series: TruncatedSeries) -> TruncatedSeries:
    """Map a rational series f(y) to the polynomial-coefficient series x*f(y)."""
    return series.map_coefficients(lambda c: Poly((Fraction(0), c)))


def exp_xy(order: int) -> TruncatedSeries:
    """The polynomial-coefficient expansion of exp(x*y): coefficients x^k/k!."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return TruncatedSeries(
        [Poly.monomial(k) * Fraction(1, math.factorial(k)) for k in range(order + 1)]
    )


def log_derivative(series: TruncatedSeries) -> TruncatedSeries:
    """f'/f at order one below the input's order; f must be invertible."""
    return series.derivative() / series.truncate(series.order - 1)
