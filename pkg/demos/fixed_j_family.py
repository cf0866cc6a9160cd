#!/usr/bin/env python3
"""Walking a fixed-j family with one integer parameter.

An elliptic curve (A, B) has j-invariant j (away from 0 and 1728) exactly
when B^2 = a A^3 with a = 4(1728 - j)/(27 j): the coefficient pairs live
on a cuspidal cubic.  Its integral points form a lattice with a rational
step N, giving the two-sided family

    A(m) = N^2 m^2 / a,   B(m) = N^3 m^3 / a,   m = +-1, +-2, ...

The curves of least height are m = +-1, every other member is one of
their twists, and m is square-free exactly for the class representatives.
"""

from fractions import Fraction

from nhc import (
    CALIBRATED,
    count_curves_with_j,
    count_representatives_with_j,
    cubic_coefficient,
    curve_from_parameter,
    height,
    is_representative,
    j_invariant,
    j_invariant_data,
    param_bound,
    twist_decompose,
)

J = -3375  # a complex-multiplication invariant, small enough to eyeball

a = cubic_coefficient(J)
data = j_invariant_data(J, CALIBRATED)
print(f"j = {J}")
print(f"cuspidal coefficient a = {a}, lattice step N = {data.step}")
print(f"least height in the family: {data.minimal_height}")
print()

print(f"{'m':>3} {'A':>8} {'B':>8} {'height':>12}  {'rep?':>5} {'twist of':>14}")
for m in range(1, 9):
    curve = curve_from_parameter(J, m)
    dec = twist_decompose(curve)
    assert j_invariant(curve) == J
    print(f"{m:>3} {curve.A:>8} {curve.B:>8} {str(height(CALIBRATED, curve)):>12}  "
          f"{str(is_representative(curve)):>5} {f'{dec.d} * {tuple(dec.representative)}':>14}")

print()
x = 10**12
bound = param_bound(J, CALIBRATED, x)
print(f"At cutoff X = 1e12 the parameter runs through |m| <= {bound}:")
print(f"  all curves:       {count_curves_with_j(J, CALIBRATED, x)}")
print(f"  representatives:  {count_representatives_with_j(J, CALIBRATED, x)}"
      f"  (square-free m only)")

print()
print("The same machinery answers rational j just as well:")
j = Fraction(11, 5)
data = j_invariant_data(j, CALIBRATED)
c1 = curve_from_parameter(j, 1)
print(f"  j = {j}: a = {data.a}, N = {data.step}, least curve {tuple(c1)} "
      f"of height {height(CALIBRATED, c1)}")
