"""
Generating polynomial sequences from (l, h) pairs
=================================================

"""

# Every sequence in this package is driven by a pair of truncated power
# series: an invertible l (nonzero constant term) and a delta series h
# (zero constant term, nonzero linear term).  The catalog knows the
# classical pairs by name.
from sheffermat import list_families, make_pair

for spec in list_families():
    print(f"{spec.name:<12} {spec.description}")
print()

# --- Laguerre ---------------------------------------------------------------
# The pair ((1-y)^(-lambda-1), y/(y-1)) at lambda = 0.  Three sequence kinds
# come out of the same pair; they differ in which generating function the
# coefficients are read from.
from sheffermat import (
    appell_sequence,
    sheffer_appell_sequence,
    sheffer_sequence,
)

pair = make_pair("laguerre", 8, {"lambda": 0})

print("Laguerre (lambda = 0), Sheffer kind: n! L_n(x)")
for n, p in enumerate(sheffer_sequence(pair, 4)):
    print(f"  n={n}:  {p}")
print()

print("Same pair, Sheffer-Appell kind: the l(y) factor divides in twice")
for n, p in enumerate(sheffer_appell_sequence(pair, 4)):
    print(f"  n={n}:  {p}")
print()

# --- Appell sequences -------------------------------------------------------
# With h = y the machinery collapses to classical Appell sequences: the
# Bernoulli pair l = (e^y - 1)/y gives the Bernoulli polynomials.
bernoulli = make_pair("bernoulli", 6)
print("Bernoulli polynomials")
for n, p in enumerate(appell_sequence(bernoulli.l, 4)):
    print(f"  B_{n}(x) = {p}")
print()

# An Appell sequence always differentiates down the index:
# d/dx B_n(x) = n B_{n-1}(x).
seq = appell_sequence(bernoulli.l, 6)
assert all(seq[n].derivative() == n * seq[n - 1] for n in range(1, 7))
print("checked: B_n'(x) = n B_{n-1}(x) for n <= 6")
print()

# --- exact arithmetic -------------------------------------------------------
# Coefficients are Fractions end to end, so parameters like lambda = 5/2
# are exact, not floating point.
from fractions import Fraction

half_integer = make_pair("laguerre", 6, {"lambda": Fraction(5, 2)})
print("Laguerre at lambda = 5/2, n = 3:")
print(" ", sheffer_sequence(half_integer, 3)[3])
