"""Main terms of the counting laws and relative-error reporting.

The exact counts elsewhere in the package grow like power laws whose
leading coefficients involve zeta values:

    representatives, all j:    4 / (alpha^(1/3) beta^(1/2) zeta(10)) X^(5/6)
    representatives, fixed j:  2 / (beta^(1/2) zeta(6)) X^(1/2)      (j = 0)
                               2 / (alpha^(1/3) zeta(4)) X^(1/3)     (j = 1728)
                               2 c(j) / zeta(2) X^(1/6)              (generic j)
    CM representatives:        sum of the three shapes, with the generic
                               coefficients summed into one constant.

Here c(j) is the sixth root of the exact rational min stored in
``families.JInvariantData``; it is evaluated from that rational at high
precision so that rounding can never flip the min.  Dropping the zeta
factors gives the corresponding main terms for the families of all curves
(not just representatives).

Everything returns mpmath floats computed at 50 digits; ``float()`` them
freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .cm import CM_ORDERS, count_cm_representatives
from .exactarith import zeta_value
from .families import j_invariant_data
from .heights import HeightSpec

_DPS = 50


def _mpf(q: int | Fraction) -> mpmath.mpf:
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)


def fixed_j_coefficient(j: int | Fraction, spec: HeightSpec) -> mpmath.mpf:
    """c(j): the generic fixed-j count is 2 * floor(c(j) * X^(1/6)).

    Sixth root of the exact rational min, at 50 digits.
    """
    with mpmath.workdps(_DPS):
        return mpmath.root(_mpf(j_invariant_data(j, spec).bound6), 6)


def cm_coefficient_sum(spec: HeightSpec) -> mpmath.mpf:
    """Sum of c(j) over the eleven CM invariants outside {0, 1728}.

    Calibrated weights give 0.950583051425665...; uncalibrated give
    1.20946795835178...
    """
    with mpmath.workdps(_DPS):
        return mpmath.fsum(
            fixed_j_coefficient(o.j, spec) for o in CM_ORDERS if o.j not in (0, 1728)
        )


def main_term_representatives(spec: HeightSpec, bound: int | Fraction) -> mpmath.mpf:
    """Leading term of the representative count over all j."""
    with mpmath.workdps(_DPS):
        x = _mpf(bound)
        coeff = 4 / (
            mpmath.cbrt(_mpf(spec.alpha)) * mpmath.sqrt(_mpf(spec.beta)) * zeta_value(10)
        )
        return coeff * x ** (mpmath.mpf(5) / 6)


def main_term_curves(spec: HeightSpec, bound: int | Fraction) -> mpmath.mpf:
    """Leading term of the all-curves count (no zeta factor)."""
    with mpmath.workdps(_DPS):
        x = _mpf(bound)
        coeff = 4 / (mpmath.cbrt(_mpf(spec.alpha)) * mpmath.sqrt(_mpf(spec.beta)))
        return coeff * x ** (mpmath.mpf(5) / 6)


def main_term_representatives_with_j(
    j: int | Fraction, spec: HeightSpec, bound: int | Fraction
) -> mpmath.mpf:
    """Leading term of the fixed-j representative count."""
    j = Fraction(j)
    with mpmath.workdps(_DPS):
        x = _mpf(bound)
        if j == 0:
            return 2 / (mpmath.sqrt(_mpf(spec.beta)) * zeta_value(6)) * mpmath.sqrt(x)
        if j == 1728:
            return 2 / (mpmath.cbrt(_mpf(spec.alpha)) * zeta_value(4)) * mpmath.cbrt(x)
        return 2 * fixed_j_coefficient(j, spec) / zeta_value(2) * mpmath.root(x, 6)


def main_term_curves_with_j(
    j: int | Fraction, spec: HeightSpec, bound: int | Fraction
) -> mpmath.mpf:
    """Leading term of the fixed-j all-curves count."""
    j = Fraction(j)
    with mpmath.workdps(_DPS):
        x = _mpf(bound)
        if j == 0:
            return 2 / mpmath.sqrt(_mpf(spec.beta)) * mpmath.sqrt(x)
        if j == 1728:
            return 2 / mpmath.cbrt(_mpf(spec.alpha)) * mpmath.cbrt(x)
        return 2 * fixed_j_coefficient(j, spec) * mpmath.root(x, 6)


def cm_asymptotic(spec: HeightSpec, bound: int | Fraction) -> mpmath.mpf:
    """Three-term expansion of the CM representative count."""
    with mpmath.workdps(_DPS):
        x = _mpf(bound)
        return (
            2 / (mpmath.sqrt(_mpf(spec.beta)) * zeta_value(6)) * mpmath.sqrt(x)
            + 2 / (mpmath.cbrt(_mpf(spec.alpha)) * zeta_value(4)) * mpmath.cbrt(x)
            + 2 * cm_coefficient_sum(spec) / zeta_value(2) * mpmath.root(x, 6)
        )


def cm_curves_asymptotic(spec: HeightSpec, bound: int | Fraction) -> mpmath.mpf:
    """Three-term expansion of the CM all-curves count (no zeta factors)."""
    with mpmath.workdps(_DPS):
        x = _mpf(bound)
        return (
            2 / mpmath.sqrt(_mpf(spec.beta)) * mpmath.sqrt(x)
            + 2 / mpmath.cbrt(_mpf(spec.alpha)) * mpmath.cbrt(x)
            + 2 * cm_coefficient_sum(spec) * mpmath.root(x, 6)
        )


_DENSITY_ZETA = {"all": 10, "j0": 6, "j1728": 4, "j_other": 2}


def density_limit(family: str) -> float:
    """Limiting share of representatives among all curves of the family:
    1/zeta(10) for all j, 1/zeta(6) for j = 0, 1/zeta(4) for j = 1728,
    1/zeta(2) for any other fixed j."""
    if family not in _DENSITY_ZETA:
        raise ValueError(f"family must be one of {sorted(_DENSITY_ZETA)}")
    return float(1 / zeta_value(_DENSITY_ZETA[family]))


@dataclass(frozen=True)
class AsymptoticReport:
    exact: int
    approximation: float
    relative_error: float  # NaN when exact = 0 but approximation is not

    def percent(self) -> str:
        return format_percent(self.relative_error)


def report(exact: int, approx: float) -> AsymptoticReport:
    """Package an exact count with its approximation and relative error."""
    if exact < 0:
        raise ValueError("exact count cannot be negative")
    approx = float(approx)
    if exact == 0:
        rel = 0.0 if approx == 0.0 else math.nan
    else:
        rel = abs(approx - exact) / exact
    return AsymptoticReport(exact, approx, rel)


def format_percent(relative_error: float) -> str:
    """Relative error as a percentage with two significant digits."""
    if math.isnan(relative_error):
        return "undefined"
    p = 100.0 * relative_error
    if p == 0.0:
        return "0%"
    decimals = max(0, 1 - math.floor(math.log10(abs(p))))
    return f"{p:.{decimals}f}%"


class CoefficientRow(NamedTuple):
    disc: int
    conductor: int
    j: int
    coefficient: mpmath.mpf  # 2 c(j) / zeta(2)


def coefficient_table(spec: HeightSpec) -> list[CoefficientRow]:
    """The leading coefficient 2 c(j) / zeta(2) of the fixed-j
    representative count, per CM order outside {0, 1728}."""
    rows = []
    with mpmath.workdps(_DPS):
        for o in CM_ORDERS:
            if o.j in (0, 1728):
                continue
            coeff = 2 * fixed_j_coefficient(o.j, spec) / zeta_value(2)
            rows.append(CoefficientRow(o.disc, o.conductor, o.j, coeff))
    return rows


class ErrorRow(NamedTuple):
    bound: Fraction
    exact: int
    approximation: float
    relative_error: float


DEFAULT_ERROR_BOUNDS: tuple[int, ...] = (
    10,
    10**2,
    10**3,
    10**4,
    10**5,
    10**6,
    10**7,
    27 * 10**9,
)


def error_table(
    spec: HeightSpec, bounds: tuple[int | Fraction, ...] = DEFAULT_ERROR_BOUNDS
) -> list[ErrorRow]:
    """Exact CM representative counts against the three-term expansion."""
    rows = []
    for b in bounds:
        exact = count_cm_representatives(spec, b)
        approx = float(cm_asymptotic(spec, b))
        rows.append(ErrorRow(Fraction(b), exact, approx, report(exact, approx).relative_error))
    return rows
