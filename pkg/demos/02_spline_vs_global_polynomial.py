"""Local quadratic interpolation versus one global polynomial.

The same four values get fitted two ways: a chain of three-point quadratic
pieces evaluated as a spline, and a single degree-3 interpolant.  The local
pieces expose convexity index by index while the global fit only admits a
verdict per interval.
"""

from seqineq import (
    Sequence,
    lagrange_polynomial,
    polynomial_convexity_on_interval,
    quadratic_piece,
    second_differences,
    spline_eval,
)

u = Sequence((0.0, -1.0, 1.0, 3.0), 0)
print("sequence:", u.values, "indices", tuple(u.indices()))
print()

seconds = second_differences(u)
for n in range(1, u.last_index):
    piece = quadratic_piece(u, n)
    # leading coefficient doubles to the discrete second difference
    print(
        f"piece centred at {n}: a={piece.a}, b={piece.b}, c={piece.c}"
        f"   (2a = {piece.second_derivative}, matches second difference {seconds[n]})"
    )
print()

print("spline samples (nearest interior piece, ties to even):")
for x in (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0):
    print(f"  S({x}) = {spline_eval(u, x)}")
print()

p = lagrange_polynomial(u)
print("global interpolant coefficients (ascending):", p.coefficients)
for lo, hi in ((0.0, 3.0), (0.0, 2.0), (2.0, 3.0)):
    verdict = polynomial_convexity_on_interval(p, lo, hi)
    print(f"  on [{lo}, {hi}]: {verdict}")
print()
print("every piece has a >= 0 exactly when the sequence is convex;")
print("the global cubic is convex on [0, 2] yet concave past the inflection.")
