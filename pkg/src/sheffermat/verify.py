"""Verification drivers: residual sweeps, the factorization check, and a
seeded randomized property suite for the Pascal/Wronskian matrix identities.

Everything returns lists of CheckResult so callers (the CLI, tests) can
aggregate pass/fail and print diagnostics uniformly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .families import make_pair
from .identities import LABELS, RESIDUALS, factorization_check
from .matrices import (
    Matrix,
    pascal_matrix,
    check_property_composition,
    check_property_product_pascal,
    check_property_product_wronskian,
    wronskian_vector,
)
from .pairs import ShefferPair
from .polynomials import Poly
from .rationals import Rational
from .series import TruncatedSeries, exp_xy

DEFAULT_SEED = 1729
DEFAULT_CASES = 200


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


def residual_checks(
    pair: ShefferPair, n: int, labels: Sequence[str] | None = None
) -> list[CheckResult]:
    """Evaluate the selected identity residuals for every degree 0..n."""
    chosen = tuple(labels) if labels else LABELS
    for label in chosen:
        if label not in LABELS:
            raise ValueError(f"unknown identity label {label!r}")
    results = []
    for label in chosen:
        residual_fn = RESIDUALS[label]
        for d in range(n + 1):
            r = residual_fn(pair, d)
            results.append(
                CheckResult(
                    f"residual[{label}] n={d}",
                    r.is_zero,
                    "" if r.is_zero else f"residual = {r}",
                )
            )
    return results


def lemma_checks(pair: ShefferPair, n: int) -> list[CheckResult]:
    """Entrywise matrix factorization check at sizes 0..n."""
    results = []
    for d in range(n + 1):
        ok = factorization_check(pair, d)
        results.append(CheckResult(f"factorization n={d}", ok))
    return results


def verify_family(
    family: str,
    params: Mapping[str, Rational | int | str] | None,
    n: int,
    labels: Sequence[str] | None = None,
    include_lemma: bool = False,
) -> list[CheckResult]:
    """Build the pair at order n+2 and run the requested checks."""
    pair = make_pair(family, n + 2, params)
    results = residual_checks(pair, n, labels)
    if include_lemma:
        results.extend(lemma_checks(pair, n))
    return results


# -- randomized matrix property suite -------------------------------------


def _random_series(rng: random.Random, order: int) -> TruncatedSeries:
    return TruncatedSeries(
        [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order + 1)]
    )


def _random_delta_series(rng: random.Random, order: int) -> TruncatedSeries:
    coeffs = [Fraction(0)]
    nonzero = [v for v in range(-5, 6) if v != 0]
    coeffs.append(Fraction(rng.choice(nonzero), rng.randint(1, 4)))
    for _ in range(order - 1):
        coeffs.append(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return TruncatedSeries(coeffs)


def _scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def _linearity_case(rng: random.Random) -> bool:
    n = rng.randint(0, 8)
    f = _random_series(rng, n)
    g = _random_series(rng, n)
    alpha, beta = _scalar(rng), _scalar(rng)
    combined = f * alpha + g * beta
    pascal_ok = (
        pascal_matrix(combined, n)
        == pascal_matrix(f, n) * alpha + pascal_matrix(g, n) * beta
    )
    wronskian_ok = (
        wronskian_vector(combined, n)
        == wronskian_vector(f, n) * alpha + wronskian_vector(g, n) * beta
    )
    return pascal_ok and wronskian_ok


def _pascal_product_case(rng: random.Random) -> bool:
    n = rng.randint(0, 8)
    return check_property_product_pascal(
        _random_series(rng, n), _random_series(rng, n), n
    )


def _wronskian_product_case(rng: random.Random) -> bool:
    n = rng.randint(0, 8)
    return check_property_product_wronskian(
        _random_series(rng, n), _random_series(rng, n), n
    )


def _composition_case(rng: random.Random) -> bool:
    n = rng.randint(1, 8)
    return check_property_composition(
        _random_series(rng, n), _random_delta_series(rng, n), n
    )


def _fixed_exponential_case() -> bool:
    expected = Matrix.column([Poly.monomial(k) for k in range(6)])
    return wronskian_vector(exp_xy(5), 5) == expected


def property_suite(
    cases: int = DEFAULT_CASES, seed: int = DEFAULT_SEED
) -> list[CheckResult]:
    """Randomized checks of the four matrix properties plus one fixed case.

    Each property gets `cases` independent random instances with degrees
    up to 8 and small rational coefficients; the RNG is seeded so runs
    are reproducible.
    """
    rng = random.Random(seed)
    suite = (
        ("property-linearity", _linearity_case),
        ("property-pascal-product", _pascal_product_case),
        ("property-wronskian-product", _wronskian_product_case),
        ("property-composition", _composition_case),
    )
    results = []
    for name, case in suite:
        failed_at = None
        for i in range(cases):
            if not case(rng):
                failed_at = i
                break
        results.append(
            CheckResult(
                name,
                failed_at is None,
                "" if failed_at is None else f"case {failed_at} of {cases} failed",
            )
        )
    results.append(
        CheckResult("fixed-exponential-wronskian", _fixed_exponential_case())
    )
    return results
