"""Polynomial sequence generators driven by exponential generating functions.

For a pair (l, h) with compositional inverse g = h^{-1}, three sequence
kinds are produced by extracting y-coefficients from a composite series
and scaling by k!:

* Sheffer:        e^{x g(y)} / l(g(y))
* Appell:         e^{x y} / l(y)
* Sheffer-Appell: e^{x g(y)} / (l(g(y)) l(y))

Each generating function is expanded once at the pair's full truncation
order and sliced, so regenerating at a higher order reproduces the lower
degrees exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InsufficientOrderError, NotInvertibleError
from .pairs import ShefferPair
from .polynomials import Poly
from .rationals import Rational
from .series import TruncatedSeries, lift, x_multiple, exp_xy

KINDS = ("sheffer", "appell", "sheffer_appell", "associated")


@dataclass(frozen=True)
class PolySequence:
    """A finite run polys[0..n] of a polynomial sequence, index = degree."""

    kind: str
    polys: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        for k, p in enumerate(self.polys):
            if p.degree != k:
                raise ValueError(f"polys[{k}] must have degree {k}, got {p!r}")

    @property
    def top_degree(self) -> int:
        return len(self.polys) - 1

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, k: int) -> Poly:
        return self.polys[k]

    def __iter__(self):
        return iter(self.polys)


def _require_degree(pair_order: int, n: int) -> None:
    if n < 0:
        raise ValueError("degree must be >= 0")
    if pair_order < n:
        raise InsufficientOrderError(
            f"degree {n} needs truncation order >= {n}, got {pair_order}"
        )


def _polys_from_egf(gf: TruncatedSeries, n: int) -> tuple[Poly, ...]:
    return tuple(gf.coeffs[k] * math.factorial(k) for k in range(n + 1))


@lru_cache(maxsize=None)
def _sheffer_appell_egf(pair: ShefferPair) -> TruncatedSeries:
    g = pair.h.compositional_inverse()
    denominator = (pair.l.compose(g) * pair.l).reciprocal()
    return x_multiple(g).exp() * lift(denominator)


@lru_cache(maxsize=None)
def _sheffer_egf(pair: ShefferPair) -> TruncatedSeries:
    g = pair.h.compositional_inverse()
    return x_multiple(g).exp() * lift(pair.l.compose(g).reciprocal())


def sheffer_appell_sequence(pair: ShefferPair, n: int) -> PolySequence:
    """Degrees 0..n of the Sheffer-Appell sequence of (l, h)."""
    _require_degree(pair.order, n)
    polys = _polys_from_egf(_sheffer_appell_egf(pair), n)
    lead = Fraction(1) / pair.l.constant_term ** 2
    slope = Fraction(1) / pair.h.coeffs[1]
    for k, p in enumerate(polys):
        assert p.leading_coefficient == lead * slope**k
    return PolySequence("sheffer_appell", polys)


def sheffer_sequence(pair: ShefferPair, n: int) -> PolySequence:
    """Degrees 0..n of the Sheffer sequence of (l, h)."""
    _require_degree(pair.order, n)
    polys = _polys_from_egf(_sheffer_egf(pair), n)
    lead = Fraction(1) / pair.l.constant_term
    slope = Fraction(1) / pair.h.coeffs[1]
    for k, p in enumerate(polys):
        assert p.leading_coefficient == lead * slope**k
    return PolySequence("sheffer", polys)


def appell_sequence(l: TruncatedSeries, n: int) -> PolySequence:
    """Degrees 0..n of the Appell sequence with generating function e^{xy}/l."""
    if not l.is_invertible:
        raise NotInvertibleError("l must have a nonzero constant term")
    _require_degree(l.order, n)
    gf = exp_xy(l.order) * lift(l.reciprocal())
    return PolySequence("appell", _polys_from_egf(gf, n))


def discrete_convolution(
    kernel: Sequence[Rational], s: PolySequence
) -> PolySequence:
    """Binomial convolution result_n = sum_k C(n, k) * kernel[k] * s[n-k].

    With kernel = the derivative vector of 1/l and s the Sheffer sequence
    of (l, h), this reproduces the Sheffer-Appell sequence of the pair.
    """
    top = s.top_degree
    if len(kernel) < top + 1:
        raise ValueError(
            f"kernel has {len(kernel)} entries but degree {top} needs {top + 1}"
        )
    polys = tuple(
        sum(
            (math.comb(n, k) * kernel[k] * s[n - k] for k in range(n + 1)),
            Poly.zero(),
        )
        for n in range(top + 1)
    )
    return PolySequence(s.kind, polys)


def appell_kernel(l: TruncatedSeries) -> tuple[Rational, ...]:
    """Derivative vector of 1/l at 0, the kernel pairing with sheffer_sequence."""
    if not l.is_invertible:
        raise NotInvertibleError("l must have a nonzero constant term")
    return l.reciprocal().derivatives_at_zero()
