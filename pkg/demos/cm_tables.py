#!/usr/bin/env python3
"""The thirteen CM families: minimal curves and counts to huge heights.

Curves with complex multiplication have one of thirteen j-invariants, so
their counting function is a sum of thirteen fixed-j counts.  The exact
formulas evaluate instantly even at cutoffs like 1e30, far beyond any
exhaustive search.
"""

from nhc import (
    CALIBRATED,
    cm_asymptotic,
    cm_count_table,
    cm_minimal_table,
    count_cm_representatives,
    report,
)

print("Least-height curve per CM order (calibrated height)")
print(f"{'d_K':>5} {'f':>2} {'j':>21}   curve, +- on the x-coefficient's partner")
for row in cm_minimal_table(CALIBRATED):
    a, b = row.curves[0]
    rhs = "x^3"
    if a:
        coeff = "" if abs(a) == 1 else str(abs(a))
        rhs += f" {'-' if a < 0 else '+'} {coeff}x"
    if b:
        rhs += f" +- {abs(b)}"
    print(f"{row.disc:>5} {row.conductor:>2} {row.j:>21}   y^2 = {rhs}   (height {row.min_height})")

print()
table = cm_count_table(CALIBRATED)
print("Curves per CM order up to X (exact)")
header = f"{'d_K':>5} {'f':>2}" + "".join(f"{f'1e{len(str(int(b)))-1}':>18}" for b in table.bounds)
print(header)
for row in table.rows:
    print(f"{row.disc:>5} {row.conductor:>2}" + "".join(f"{c:>18}" for c in row.counts))
print(f"{'total':>8}" + "".join(f"{t:>18}" for t in table.totals))

print()
print("Exact CM class counts vs the three-term expansion")
for n in (2, 4, 6, 8):
    x = 10**n
    exact = count_cm_representatives(CALIBRATED, x)
    approx = float(cm_asymptotic(CALIBRATED, x))
    print(f"  X = 1e{n}: exact {exact:>6}, expansion {approx:>10.2f}, "
          f"error {report(exact, approx).percent()}")
