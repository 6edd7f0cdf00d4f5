"""Subgroups and digit sets of a dilation on Z_N x Z_N.

Run with ``python demos/01_digit_sets.py``.
"""

from onws import catalog
from onws.digits import DigitKind, digit_set, standard_partition, verify_digit_properties
from onws.lattice import IntMatrix2, NonIntegerDual, make_dilation

# A dilation on Z_2^2.  B = N A^-1 must be an integer matrix.
ctx = catalog.example_context("2.8")
print("A =", ctx.A, " B =", ctx.B, " C =", ctx.C)
print("q = |det A| =", ctx.q, " r = N^2 / q =", ctx.r)

# The three images.  |A Z| = r, |B Z| = |C Z| = q.
print("A Z_N^2:", ctx.image_A.points)
print("B Z_N^2:", ctx.image_B.points)
print("C Z_N^2:", ctx.image_C.points)

# Digit sets are the lexicographically smallest coset representatives.
D = digit_set(ctx, DigitKind.FOR_B)
print("D  =", D.points)
print("D* =", digit_set(ctx, DigitKind.FOR_C).points)
print("D0 =", digit_set(ctx, DigitKind.FOR_A).points)

# D satisfies the digit-set properties used by the wavelet theory
report = verify_digit_properties(D)
print(report.checks)

# alpha + A beta tiles the whole grid exactly once
print(sorted(standard_partition(ctx, digit_set(ctx, "D0"), D)))

# det A dividing N^2 is not enough: here 8 | 16 but 4 A^-1 is not integral
try:
    make_dilation(4, IntMatrix2(3, 1, 1, 3))
except NonIntegerDual as exc:
    print("rejected:", exc)
