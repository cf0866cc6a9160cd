"""Integer Weierstrass curves, fixed-j parametrization, and exact counts.

A pair (A, B) of integers defines E_{A,B} : y^2 = x^3 + Ax + B, elliptic
iff the discriminant -16(4A^3 + 27B^2) is nonzero.  Two families matter:

  * "curves": every elliptic (A, B), counted by ``count_curves``;
  * "representatives": the (A, B) with no prime p having p^4 | A and
    p^6 | B -- one per Q-isomorphism class -- counted by
    ``count_representatives``.

Every curve is a unique twist d * (A0, B0) = (d^4 A0, d^6 B0) of a
representative, which scales the height by d^12; Moebius inversion over
that decomposition turns the elementary box count into an exact count of
representatives.

Fixed j-invariant: for j outside {0, 1728}, an elliptic (A, B) has
j-invariant j exactly when B^2 = a A^3 with a = 4(1728 - j)/(27 j), i.e.
when (A, B) is an integral point of a cuspidal cubic.  The lattice
parametrization from ``cuspidal`` then walks the whole family:

    A(m) = step^2 m^2 / a,   B(m) = step^3 m^3 / a,   m in Z \\ {0},

with the representatives being exactly the square-free m.  For j = 0 the
family is (0, m) and representatives are the 6-free m; for j = 1728 it is
(m, 0) with 4-free m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .cuspidal import cubic_param
from .exactarith import factorize, floor_rational_root, count_kfree, moebius_sieve
from .heights import HeightSpec, box, height


class WeierstrassCurve(NamedTuple):
    A: int
    B: int


class SingularCurveError(ValueError):
    """Raised when an operation requires a nonsingular curve."""


class SpecialJError(ValueError):
    """Raised when j in {0, 1728} reaches the generic fixed-j machinery."""


def discriminant(curve: WeierstrassCurve | tuple[int, int]) -> int:
    a, b = curve
    return -16 * (4 * a**3 + 27 * b**2)


def j_invariant(curve: WeierstrassCurve | tuple[int, int]) -> Fraction:
    """1728 * 4A^3 / (4A^3 + 27B^2) in lowest terms; needs a nonsingular
    curve."""
    a, b = curve
    s = 4 * a**3 + 27 * b**2
    if s == 0:
        raise SingularCurveError(f"curve ({a}, {b}) is singular")
    return Fraction(6912 * a**3, s)


def _twist_scale(a: int, b: int) -> int:
    """The largest d with d^4 | A and d^6 | B (d = 1 for representatives)."""
    if a == 0 and b == 0:
        raise SingularCurveError("curve (0, 0) is singular")
    if a == 0:
        exps = {p: e // 6 for p, e in factorize(b).factors.items()}
    elif b == 0:
        exps = {p: e // 4 for p, e in factorize(a).factors.items()}
    else:
        g = math.gcd(a, b)
        exps = {}
        for p in factorize(g).factors:
            ea = 0
            aa = abs(a)
            while aa % p == 0:
                aa //= p
                ea += 1
            eb = 0
            bb = abs(b)
            while bb % p == 0:
                bb //= p
                eb += 1
            exps[p] = min(ea // 4, eb // 6)
    d = 1
    for p, e in exps.items():
        d *= p**e
    return d


def is_representative(curve: WeierstrassCurve | tuple[int, int]) -> bool:
    """True iff no prime p has p^4 | A and p^6 | B."""
    a, b = curve
    if discriminant(curve) == 0:
        raise SingularCurveError(f"curve ({a}, {b}) is singular")
    return _twist_scale(a, b) == 1


def twist(curve: WeierstrassCurve | tuple[int, int], d: int) -> WeierstrassCurve:
    """Scale (A, B) -> (d^4 A, d^6 B); preserves the j-invariant."""
    if d < 1:
        raise ValueError("twist scale must be >= 1")
    a, b = curve
    return WeierstrassCurve(d**4 * a, d**6 * b)


@dataclass(frozen=True)
class TwistDecomposition:
    d: int
    representative: WeierstrassCurve


def twist_decompose(curve: WeierstrassCurve | tuple[int, int]) -> TwistDecomposition:
    """Write an elliptic curve uniquely as the d-twist of a representative."""
    a, b = curve
    if discriminant(curve) == 0:
        raise SingularCurveError(f"curve ({a}, {b}) is singular")
    d = _twist_scale(a, b)
    return TwistDecomposition(d, WeierstrassCurve(a // d**4, b // d**6))


def cubic_coefficient(j: int | Fraction) -> Fraction:
    """The coefficient a with: j-invariant equals j iff B^2 = a A^3.

    a(j) = 4(1728 - j) / (27 j); only defined away from the special
    invariants 0 and 1728.
    """
    j = Fraction(j)
    if j == 0 or j == 1728:
        raise SpecialJError(f"j = {j} has a degenerate family (A = 0 or B = 0)")
    return 4 * (1728 - j) / (27 * j)


@dataclass(frozen=True)
class JInvariantData:
    """Per-height data of a fixed-j family (j outside {0, 1728}).

    bound6_x and bound6_y are the rational sixth powers of the two
    candidate slopes whose min caps the lattice parameter:
    |m| <= (min(bound6_x, bound6_y) * X)^(1/6) at height cutoff X.
    """

    j: Fraction
    a: Fraction
    step: Fraction
    bound6_x: Fraction
    bound6_y: Fraction

    @property
    def bound6(self) -> Fraction:
        return min(self.bound6_x, self.bound6_y)

    @property
    def minimal_height(self) -> Fraction:
        # the m = +-1 curves enter the box exactly when X reaches 1/bound6
        return 1 / self.bound6


def j_invariant_data(j: int | Fraction, spec: HeightSpec) -> JInvariantData:
    j = Fraction(j)
    a = cubic_coefficient(j)
    step = cubic_param(a).step
    step6 = step**6
    return JInvariantData(
        j=j,
        a=a,
        step=step,
        bound6_x=abs(a) ** 3 / (step6 * spec.alpha),
        bound6_y=abs(a) ** 2 / (step6 * spec.beta),
    )


def _exact_int(q: Fraction) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {q}")
    return int(q)


def curve_from_parameter(j: int | Fraction, m: int) -> WeierstrassCurve:
    """The m-th curve of the fixed-j family.

    Generic j: (step^2 m^2 / a, step^3 m^3 / a), both exact integers.
    Conventions for the degenerate families: j = 0 -> (0, m) and
    j = 1728 -> (m, 0).
    """
    if m == 0:
        raise ValueError("parameter m must be nonzero")
    j = Fraction(j)
    if j == 0:
        return WeierstrassCurve(0, m)
    if j == 1728:
        return WeierstrassCurve(m, 0)
    a = cubic_coefficient(j)
    step = cubic_param(a).step
    return WeierstrassCurve(
        _exact_int(step**2 * m**2 / a),
        _exact_int(step**3 * m**3 / a),
    )


def param_bound(j: int | Fraction, spec: HeightSpec, bound: int | Fraction) -> int:
    """Largest |m| whose curve stays within height <= bound (0 if none).

    Equivalently: m is admissible iff height(curve_from_parameter(j, m))
    is at most the cutoff.
    """
    x = Fraction(bound)
    if x <= 0:
        raise ValueError("height bound must be positive")
    j = Fraction(j)
    if j == 0:
        return floor_rational_root(x / spec.beta, 2)
    if j == 1728:
        return floor_rational_root(x / spec.alpha, 3)
    data = j_invariant_data(j, spec)
    return min(
        floor_rational_root(data.bound6_x * x, 6),
        floor_rational_root(data.bound6_y * x, 6),
    )


def count_curves_with_j(j: int | Fraction, spec: HeightSpec, bound: int | Fraction) -> int:
    """Exact number of elliptic (A, B) with j-invariant j, height <= bound."""
    return 2 * param_bound(j, spec, bound)


def count_representatives_with_j(
    j: int | Fraction, spec: HeightSpec, bound: int | Fraction
) -> int:
    """Exact number of Q-isomorphism class representatives with invariant j
    and height <= bound (k-free parameter count; k = 6, 4, 2 as j = 0,
    1728, generic)."""
    m = param_bound(j, spec, bound)
    j = Fraction(j)
    k = 6 if j == 0 else 4 if j == 1728 else 2
    return 2 * count_kfree(m, k)


def count_curves(spec: HeightSpec, bound: int | Fraction) -> int:
    """Exact number of elliptic (A, B) with height <= bound.

    Lattice points of the height box minus the points of the singular
    locus B^2 = -(4/27) A^3, whose in-box count is an exact floor (the
    two sixth-power forms below are 1/(27 alpha) and 1/(4 beta)).
    """
    x = Fraction(bound)
    if x <= 0:
        raise ValueError("height bound must be positive")
    b = box(spec, x)
    singular = min(
        floor_rational_root(x / (27 * spec.alpha), 6),
        floor_rational_root(x / (4 * spec.beta), 6),
    )
    return (2 * b.x_bound + 1) * (2 * b.y_bound + 1) - 2 * singular - 1


def count_representatives(spec: HeightSpec, bound: int | Fraction) -> int:
    """Exact number of Q-isomorphism class representatives with height
    <= bound, via Moebius inversion over the twist decomposition:

        sum_{d <= bound^(1/12)} moebius(d) * count_curves(bound / d^12).
    """
    x = Fraction(bound)
    if x <= 0:
        raise ValueError("height bound must be positive")
    dmax = floor_rational_root(x, 12)
    if dmax < 1:
        return 0
    mu = moebius_sieve(dmax)
    return sum(
        mu[d] * count_curves(spec, x / Fraction(d) ** 12)
        for d in range(1, dmax + 1)
        if mu[d]
    )


def minimal_curves(
    j: int | Fraction, spec: HeightSpec
) -> tuple[tuple[WeierstrassCurve, WeierstrassCurve], Fraction]:
    """The two curves of least height with invariant j, and that height.

    These are the parameter values m = +1 and m = -1 (in that order); the
    pair differs only in the sign of B (of A when j = 1728).
    """
    plus = curve_from_parameter(j, 1)
    minus = curve_from_parameter(j, -1)
    return (plus, minus), height(spec, plus)
