"""Recurrence and differential identities for Sheffer-Appell sequences.

Each identity comes with two operations:

* a coefficient extractor returning the exact (a, b, c) vectors, defined
  as derivative vectors at 0 of specific composite series of the pair;
* a residual: the identity with all terms moved to one side, returned as
  an exact polynomial in x.  The contract is that every residual is the
  zero polynomial for every valid pair.

The four identities carry the short labels "2.1", "3.1", "3.2" and "3.3",
matching the CLI's --theorem flag:

==========  ==========================================================
"2.1"       differential equation:
            sum_k (x a_k + b_k + c_k) sA_n^(k)(x)/k!  =  n sA_n(x)
"3.1"       derivative recurrence:
            sA_{n+1}(x) = sum_k (x a_k + b_k + c_k) sA_n^(k)(x)/k!
"3.2"       mixed recurrence:
            sA_{n+1} a_0 = x sA_n + sum_k C(n,k) sA_{n-k} (b_k + c_k)
                           - sum_{k>=1} C(n,k) sA_{n+1-k} a_k
"3.3"       convolution recurrence:
            sA_{n+1} = sum_k C(n,k) (x a_k + b_k + c_k) sA_{n-k}
==========  ==========================================================

There is also the matrix factorization check: the lower triangular
matrix of scaled x-derivatives sA_i^(j)(x)/j! equals
W[1, g, ..., g^n] Omega^{-1} P[1/l] P[1/l(h)] P[e^{xy}] with g = h^{-1},
all evaluated at y = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientOrderError
from .matrices import (
    Matrix,
    lift_matrix,
    omega_inverse,
    pascal_matrix,
    wronskian_powers_matrix,
)
from .pairs import ShefferPair
from .polynomials import Poly
from .rationals import Rational, format_rational
from .series import TruncatedSeries, exp_xy
from .sequences import sheffer_appell_sequence

LABELS = ("2.1", "3.1", "3.2", "3.3")


@dataclass(frozen=True)
class CoeffTriple:
    """The exact (a, b, c) vectors of one identity, k = 0..n."""

    label: str
    a: tuple[Rational, ...]
    b: tuple[Rational, ...]
    c: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if self.label not in LABELS:
            raise ValueError(f"label must be one of {LABELS}, got {self.label!r}")
        if not (len(self.a) == len(self.b) == len(self.c)):
            raise ValueError("a, b, c must have equal length")

    def to_json(self) -> dict:
        return {
            "theorem": self.label,
            "a": [format_rational(v) for v in self.a],
            "b": [format_rational(v) for v in self.b],
            "c": [format_rational(v) for v in self.c],
        }


def _coeff_parts(pair: ShefferPair, n: int):
    """Truncated l, h, their derivatives, and the working order for extractors."""
    m = pair.order - 1
    if m < n:
        raise InsufficientOrderError(
            f"coefficients to k = {n} need pair order >= {n + 1}, got {pair.order}"
        )
    return (
        pair.l.truncate(m),
        pair.h.truncate(m),
        pair.l.derivative(),
        pair.h.derivative(),
        m,
    )


def _dv(series: TruncatedSeries, n: int) -> tuple[Rational, ...]:
    return series.truncate(n).derivatives_at_zero()


def differential_equation_coeffs(pair: ShefferPair, n: int) -> CoeffTriple:
    """Label "2.1": a = dv(h/h'), b = dv(-h l'(h)/l(h)), c = dv(-h l'/(h' l))."""
    l, h, lp, hp, _ = _coeff_parts(pair, n)
    a = h * hp.reciprocal()
    b = -(h * lp.compose(h)) * l.compose(h).reciprocal()
    c = -(h * lp) * (hp * l).reciprocal()
    return CoeffTriple("2.1", _dv(a, n), _dv(b, n), _dv(c, n))


def derivative_recurrence_coeffs(pair: ShefferPair, n: int) -> CoeffTriple:
    """Label "3.1": a = dv(1/h'), b = dv(-l'(h)/l(h)), c = dv(-l'/(h' l))."""
    l, h, lp, hp, _ = _coeff_parts(pair, n)
    a = hp.reciprocal()
    b = -lp.compose(h) * l.compose(h).reciprocal()
    c = -lp * (hp * l).reciprocal()
    return CoeffTriple("3.1", _dv(a, n), _dv(b, n), _dv(c, n))


def mixed_recurrence_coeffs(pair: ShefferPair, n: int) -> CoeffTriple:
    """Label "3.2": a = dv(h'(g)), b = dv(-h'(g) l'/l), c = dv(-l'(g)/l(g))
    with g = h^{-1}."""
    l, _, lp, hp, m = _coeff_parts(pair, n)
    g = pair.h.compositional_inverse().truncate(m)
    a = hp.compose(g)
    b = -(a * lp) * l.reciprocal()
    c = -lp.compose(g) * l.compose(g).reciprocal()
    return CoeffTriple("3.2", _dv(a, n), _dv(b, n), _dv(c, n))


def convolution_recurrence_coeffs(pair: ShefferPair, n: int) -> CoeffTriple:
    """Label "3.3": a = dv(1/h'(g)), b = dv(-l'/l),
    c = dv(-l'(g)/(h'(g) l(g))) with g = h^{-1}."""
    l, _, lp, hp, m = _coeff_parts(pair, n)
    g = pair.h.compositional_inverse().truncate(m)
    hpg = hp.compose(g)
    a = hpg.reciprocal()
    b = -lp * l.reciprocal()
    c = -lp.compose(g) * (hpg * l.compose(g)).reciprocal()
    return CoeffTriple("3.3", _dv(a, n), _dv(b, n), _dv(c, n))


COEFF_EXTRACTORS = {
    "2.1": differential_equation_coeffs,
    "3.1": derivative_recurrence_coeffs,
    "3.2": mixed_recurrence_coeffs,
    "3.3": convolution_recurrence_coeffs,
}


def _derivative_combination(triple: CoeffTriple, poly: Poly, n: int) -> Poly:
    """sum_{k=0}^{n} (x a_k + b_k + c_k) * poly^(k)(x) / k!."""
    acc = Poly.zero()
    for k in range(n + 1):
        factor = Poly((triple.b[k] + triple.c[k], triple.a[k]))
        acc = acc + factor * poly.derivative(k) * Fraction(1, math.factorial(k))
    return acc


def differential_equation_residual(pair: ShefferPair, n: int) -> Poly:
    """Residual of identity "2.1" at degree n; zero for every valid pair."""
    triple = differential_equation_coeffs(pair, n)
    s = sheffer_appell_sequence(pair, n)
    return _derivative_combination(triple, s[n], n) - s[n] * n


def derivative_recurrence_residual(pair: ShefferPair, n: int) -> Poly:
    """Residual of identity "3.1" at degree n; zero for every valid pair."""
    triple = derivative_recurrence_coeffs(pair, n)
    s = sheffer_appell_sequence(pair, n + 1)
    return s[n + 1] - _derivative_combination(triple, s[n], n)


def mixed_recurrence_residual(pair: ShefferPair, n: int) -> Poly:
    """Residual of identity "3.2" at degree n; zero for every valid pair."""
    t = mixed_recurrence_coeffs(pair, n)
    s = sheffer_appell_sequence(pair, n + 1)
    acc = s[n + 1] * t.a[0] - Poly.x() * s[n]
    for k in range(n + 1):
        acc = acc - math.comb(n, k) * (t.b[k] + t.c[k]) * s[n - k]
    for k in range(1, n + 1):
        acc = acc + math.comb(n, k) * t.a[k] * s[n + 1 - k]
    return acc


def convolution_recurrence_residual(pair: ShefferPair, n: int) -> Poly:
    """Residual of identity "3.3" at degree n; zero for every valid pair."""
    t = convolution_recurrence_coeffs(pair, n)
    s = sheffer_appell_sequence(pair, n + 1)
    acc = s[n + 1]
    for k in range(n + 1):
        factor = Poly((t.b[k] + t.c[k], t.a[k]))
        acc = acc - math.comb(n, k) * factor * s[n - k]
    return acc


RESIDUALS = {
    "2.1": differential_equation_residual,
    "3.1": derivative_recurrence_residual,
    "3.2": mixed_recurrence_residual,
    "3.3": convolution_recurrence_residual,
}


def scaled_derivative_matrix(pair: ShefferPair, n: int) -> Matrix:
    """Lower triangular matrix with entry (i, j) = sA_i^(j)(x) / j!.

    Differentiation here is in x, unlike every other matrix in this
    package, which differentiates the series variable y.
    """
    s = sheffer_appell_sequence(pair, n)
    return Matrix(
        [
            [s[i].derivative(j) * Fraction(1, math.factorial(j)) for j in range(n + 1)]
            for i in range(n + 1)
        ]
    )


def factorization_check(pair: ShefferPair, n: int) -> bool:
    """Entrywise-exact matrix factorization of the scaled derivative matrix.

    Checks  [sA_i^(j)/j!] = W[1, g, ..., g^n] Omega^{-1} P[1/l] P[1/l(h)]
    P[e^{xy}]  at y = 0, with g = h^{-1}.
    """
    lhs = scaled_derivative_matrix(pair, n)
    g = pair.h.compositional_inverse()
    rational_part = (
        wronskian_powers_matrix(g, n)
        @ omega_inverse(n)
        @ pascal_matrix(pair.l.reciprocal(), n)
        @ pascal_matrix(pair.l.compose(pair.h).reciprocal(), n)
    )
    rhs = lift_matrix(rational_part) @ pascal_matrix(exp_xy(n), n)
    return lhs == rhs


def associated_residual(pair: ShefferPair, n: int, which: str) -> Poly:
    """Residual of the l = 1 specialization of one of the four identities.

    The "3.2" specialization coincides with "3.1" and is checked as that
    same derivative recurrence.  Requires l to be the constant series 1;
    b and c then vanish identically, which is asserted.
    """
    if which not in LABELS:
        raise ValueError(f"which must be one of {LABELS}, got {which!r}")
    one = TruncatedSeries.constant(Fraction(1), pair.order)
    if pair.l != one:
        raise ValueError("associated-sequence identities require l = 1")
    effective = "3.1" if which == "3.2" else which
    triple = COEFF_EXTRACTORS[effective](pair, n)
    assert all(v == 0 for v in triple.b)
    assert all(v == 0 for v in triple.c)
    return RESIDUALS[effective](pair, n)
