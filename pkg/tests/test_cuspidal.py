"""Cuspidal cubic lattice tests.

The independent oracle is a per-x scan: for each integer x in the box,
y^2 = a x^3 has an integral solution iff num(a) x^3 / den(a) is a perfect
square, checked with exact integer square roots.  One small box is also
scanned point by point.
"""

import math
import random
from fractions import Fraction

import pytest

from nhc.cuspidal import (
    count_points,
    cubic_param,
    enumerate_points,
    point_bound,
    point_from_parameter,
)


def scan_points(a: Fraction, t1: int, t2: int) -> set[tuple[int, int]]:
    """Every integral (x, y) with y^2 = a x^3, |x| <= t1, |y| <= t2."""
    found = {(0, 0)}
    for x in range(-t1, t1 + 1):
        if x == 0:
            continue
        num = a.numerator * x**3
        if num < 0 or num % a.denominator:
            continue
        y2 = num // a.denominator
        y = math.isqrt(y2)
        if y * y == y2 and y <= t2:
            found.add((x, y))
            found.add((x, -y))
    return found


class TestCubicParam:
    def test_step_values(self):
        assert cubic_param(Fraction(-4, 27)).step == Fraction(2, 3)
        assert cubic_param(1).step == 1
        assert cubic_param(Fraction(-484, 3375)).step == Fraction(22, 15)
        assert cubic_param(Fraction(-28, 125)).step == Fraction(14, 5)

    def test_exponent_rule(self):
        # ord profile of -484/3375 is (2, 2, -3, -3) at (2, 11, 3, 5)
        param = cubic_param(Fraction(-484, 3375))
        assert param.alpha_exponents == {2: 1, 3: -1, 5: -1, 11: 1}

    def test_negative_single_power(self):
        # ord_5 = -1 rounds up to 0: the step ignores the denominator prime
        assert cubic_param(Fraction(1, 5)).step == 1
        assert cubic_param(Fraction(1, 5)).alpha_exponents == {5: 0}

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            cubic_param(0)


class TestPointFromParameter:
    def test_examples(self):
        assert point_from_parameter(Fraction(-4, 27), Fraction(2, 3)) == (-3, -2)
        assert point_from_parameter(1, 2) == (4, 8)
        assert point_from_parameter(Fraction(-28, 125), Fraction(14, 5)) == (-35, -98)

    def test_point_satisfies_equation(self):
        a = Fraction(-28, 125)
        x, y = point_from_parameter(a, Fraction(14, 5))
        assert Fraction(y) ** 2 == a * Fraction(x) ** 3

    def test_off_lattice_rejected(self):
        with pytest.raises(ValueError):
            point_from_parameter(Fraction(-4, 27), Fraction(1, 3))


class TestCounting:
    def test_examples(self):
        assert count_points(1, 100, 1000) == 21  # (m^2, m^3), |m| <= 10
        assert count_points(1, Fraction(1, 2), Fraction(1, 2)) == 1
        # the singular locus inside the calibrated X = 7000 box
        assert count_points(Fraction(-4, 27), 12, 16) == 5

    def test_enumerate_examples(self):
        assert enumerate_points(1, 4, 8) == [
            (-2, 4, -8),
            (-1, 1, -1),
            (0, 0, 0),
            (1, 1, 1),
            (2, 4, 8),
        ]
        assert {(x, y) for _, x, y in enumerate_points(Fraction(-4, 27), 3, 2)} == {
            (0, 0),
            (-3, 2),
            (-3, -2),
        }
        assert enumerate_points(1, Fraction(1, 2), Fraction(1, 2)) == [(0, 0, 0)]

    @pytest.mark.parametrize(
        "a",
        [
            Fraction(1),
            Fraction(-1),
            Fraction(4, 27),
            Fraction(-4, 27),
            Fraction(28, 125),
            Fraction(-28, 125),
            Fraction(2, 9),
            Fraction(-2, 9),
        ],
    )
    def test_bijection_against_scan(self, a):
        enumerated = {(x, y) for _, x, y in enumerate_points(a, 10**4, 10**6)}
        assert enumerated == scan_points(a, 10**4, 10**6)
        assert count_points(a, 10**4, 10**6) == len(enumerated)

    def test_small_box_full_double_scan(self):
        a = Fraction(-4, 27)
        direct = {
            (x, y)
            for x in range(-60, 61)
            for y in range(-60, 61)
            if a.denominator * y * y == a.numerator * x**3
        }
        assert {(x, y) for _, x, y in enumerate_points(a, 60, 60)} == direct

    def test_count_matches_enumeration_random_rationals(self):
        rng = random.Random(20250811)
        for _ in range(200):
            num = rng.randint(-999, 999) or 1
            den = rng.randint(1, 999)
            a = Fraction(num, den)
            t1 = Fraction(rng.randint(1, 5000), rng.randint(1, 9))
            t2 = Fraction(rng.randint(1, 100000), rng.randint(1, 9))
            pts = enumerate_points(a, t1, t2)
            assert count_points(a, t1, t2) == len(pts)
            for _, x, y in pts:
                assert a.denominator * y * y == a.numerator * x**3
                assert abs(x) <= t1 and abs(y) <= t2

    def test_bound_is_tight(self):
        # the next lattice point must fall outside the box
        a = Fraction(-4, 27)
        m = point_bound(a, 12, 16)
        step = cubic_param(a).step
        x, y = point_from_parameter(a, step * (m + 1))
        assert abs(x) > 12 or abs(y) > 16
