from fractions import Fraction

import pytest

from sheffermat import (
    FAIL,
    IDENTITY_IDS,
    PASS,
    Poly,
    run_worked_example_audit,
)

# Status-per-degree vectors for the default parameters (lambda = 0, m = 0),
# confirmed against an independent symbolic expansion before being frozen
# here.  A FAIL marks a printed identity that does not hold as displayed.
FROZEN_STATUSES = {
    "laguerre-differential-recurrence": (PASS,) + (FAIL,) * 6,
    "laguerre-derivative-recurrence": (FAIL,) * 7,
    "miller-lee-differential-recurrence": (PASS,) + (FAIL,) * 6,
    "miller-lee-derivative-recurrence": (FAIL,) * 7,
    "miller-lee-mixed-recurrence": (FAIL,) * 7,
}


@pytest.fixture(scope="module")
def report():
    return run_worked_example_audit(6)


def test_report_shape(report):
    assert report.identities == IDENTITY_IDS
    assert len(report) == 5 * 7


def test_frozen_status_vectors(report):
    for identity, expected in FROZEN_STATUSES.items():
        assert report.statuses(identity) == expected, identity


def test_pass_rows_have_zero_residual(report):
    for entry in report:
        if entry.status == PASS:
            assert entry.residual == Poly.zero()
        else:
            assert entry.residual != Poly.zero()


def test_entry_json_shape(report):
    payload = report.to_json()
    assert len(payload) == len(report)
    row = payload[0]
    assert set(row) == {
        "identity-id",
        "parameters",
        "n",
        "status",
        "residual",
        "derived-coeffs",
        "printed-coeffs",
    }
    assert row["identity-id"] == "laguerre-differential-recurrence"
    assert row["parameters"] == {"lambda": "0"}
    assert row["n"] == 0
    assert row["status"] == PASS
    assert row["residual"] == []
    assert set(row["derived-coeffs"]) == {"a", "b", "c"}
    assert all(
        isinstance(v, str)
        for vec in row["derived-coeffs"].values()
        for v in vec
    )


def test_vectors_are_sliced_per_degree(report):
    for entry in report:
        assert len(entry.derived.a) == entry.n + 1
        assert len(entry.printed["a"]) == entry.n + 1


def test_derived_beats_printed_on_laguerre_derivative(report):
    # The printed c column is constant-sign where the derived one
    # alternates; the disagreement is what the FAIL statuses record.
    entry = next(
        e
        for e in report
        if e.identity == "laguerre-derivative-recurrence" and e.n == 1
    )
    assert entry.derived.c == (Fraction(1), Fraction(-1))
    assert entry.printed["c"] == (Fraction(-1), Fraction(1))


def test_statuses_stable_under_parameters():
    report = run_worked_example_audit(4, lam=1, m=2)
    for identity, expected in FROZEN_STATUSES.items():
        assert report.statuses(identity) == expected[:5], identity


def test_minimum_degree_enforced():
    with pytest.raises(ValueError):
        run_worked_example_audit(2)
