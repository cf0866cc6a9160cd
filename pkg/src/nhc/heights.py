"""Naive heights and their exact lattice boxes.

The height of an integer curve y^2 = x^3 + Ax + B under weights
(alpha, beta) is

    H(A, B) = max(alpha * |A|^3, beta * B^2).

Two classical normalizations get named presets: CALIBRATED = (4, 27) and
UNCALIBRATED = (1, 1).  Weights are restricted to positive rationals so
that every comparison and floor below is decidable exactly (irrational
weights would need certified interval arithmetic, which this package
deliberately does not attempt).

H(A, B) <= X cuts out a rectangle: |A| <= (X/alpha)^(1/3) and
|B| <= (X/beta)^(1/2).  ``box`` returns the integer corner floors, so a
lattice point satisfies the height bound iff it lies inside the box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactarith import floor_rational_root


@dataclass(frozen=True)
class HeightSpec:
    """Positive rational weights (alpha, beta) of the height max-form."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("height weights must be positive")


CALIBRATED = HeightSpec(Fraction(4), Fraction(27))
UNCALIBRATED = HeightSpec(Fraction(1), Fraction(1))


@dataclass(frozen=True)
class HeightBox:
    """Integer bounds: height <= X iff |A| <= x_bound and |B| <= y_bound."""

    x_bound: int
    y_bound: int


def height(spec: HeightSpec, curve: tuple[int, int]) -> Fraction:
    """max(alpha * |A|^3, beta * B^2) as an exact rational."""
    a, b = curve
    return max(spec.alpha * abs(a) ** 3, spec.beta * Fraction(b) ** 2)


def box(spec: HeightSpec, bound: int | Fraction) -> HeightBox:
    """The exact lattice box of the region height <= bound."""
    x = Fraction(bound)
    if x <= 0:
        raise ValueError("height bound must be positive")
    return HeightBox(
        x_bound=floor_rational_root(x / spec.alpha, 3),
        y_bound=floor_rational_root(x / spec.beta, 2),
    )


def parse_height_spec(text: str) -> HeightSpec:
    """Parse "cal", "ncal", or "alpha/<num>:<den>,beta/<num>:<den>"."""
    t = text.strip().lower()
    if t == "cal":
        return CALIBRATED
    if t == "ncal":
        return UNCALIBRATED
    try:
        parts = dict(item.split("/", 1) for item in t.split(","))
        alpha = Fraction(*map(int, parts["alpha"].split(":")))
        beta = Fraction(*map(int, parts["beta"].split(":")))
    except (KeyError, ValueError, TypeError) as exc:
        raise ValueError(
            f"bad height spec {text!r}; expected 'cal', 'ncal' or "
            "'alpha/<num>:<den>,beta/<num>:<den>'"
        ) from exc
    return HeightSpec(alpha, beta)


def format_height_spec(spec: HeightSpec) -> str:
    """Inverse of parse_height_spec (presets come back as their names)."""
    if spec == CALIBRATED:
        return "cal"
    if spec == UNCALIBRATED:
        return "ncal"
    a, b = spec.alpha, spec.beta
    return f"alpha/{a.numerator}:{a.denominator},beta/{b.numerator}:{b.denominator}"
