from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from hyperzeta.algebra.matrix import IntMatrix
from hyperzeta.algebra.poly import (
    IntPoly,
    InterpolationError,
    NotEvenError,
    PolynomialDivisionError,
    char_poly,
    coefficient_diff,
    det_pencil,
    eval_rational,
    interpolate_integer,
    is_even_poly,
    sample_points,
    substitute_even,
)


def test_trailing_zeros_are_normalized() -> None:
    assert IntPoly.of((1, 2, 0, 0)) == IntPoly.of((1, 2))
    assert IntPoly.of(()).is_zero
    assert IntPoly.constant(0).degree == 0


def test_k4_collapsed_golden_expansion() -> None:
    factored = IntPoly.of((1, -1)) * IntPoly.of((1, 1, 1, -5, -5, -5, 4, 4, 4))
    assert factored.to_text() == "1 0 0 -6 0 0 9 0 0 -4"
    assert IntPoly.parse("1 0 0 -6 0 0 9 0 0 -4") == factored


def test_power_and_shift() -> None:
    p = IntPoly.of((1, 1)) ** 3
    assert p.coefficients == (1, 3, 3, 1)
    assert IntPoly.of((0, 1)).shift(2) == IntPoly.of((2, 1))
    q = IntPoly.of((3, 0, 1))
    assert q.shift(-1).evaluate(5) == q.evaluate(4)


def test_exact_division_and_multiplicity() -> None:
    factor = IntPoly.of((1, -1))
    p = factor**3 * IntPoly.of((1, 2))
    assert p.multiplicity(factor) == 3
    assert p.strip(factor, 3) == IntPoly.of((1, 2))
    assert p // factor == factor**2 * IntPoly.of((1, 2))
    with pytest.raises(PolynomialDivisionError):
        IntPoly.of((1, 2)).exact_div(factor)
    # quotient with a non-integer coefficient is not an exact division
    assert not IntPoly.of((2, 0)).divides(IntPoly.of((1,)))


def test_substitute_even() -> None:
    assert substitute_even(IntPoly.of((1, 0, -2, 0, 5))) == IntPoly.of((1, -2, 5))
    with pytest.raises(NotEvenError):
        substitute_even(IntPoly.of((1, 1)))
    assert is_even_poly(IntPoly.of((1, 0, -2, 0, 5)))
    assert not is_even_poly(IntPoly.of((0, 1)))
    assert is_even_poly(IntPoly.of((3,)))


def test_interpolation_round_trip() -> None:
    rng = random.Random(3)
    for _ in range(50):
        p = IntPoly.of(rng.randint(-9, 9) for _ in range(rng.randint(1, 7)))
        xs = sample_points(p.degree + 3)
        assert interpolate_integer(xs, [p.evaluate(x) for x in xs]) == p


def test_interpolation_rejects_fractional_fit() -> None:
    with pytest.raises(InterpolationError):
        interpolate_integer([0, 2], [0, 1])


def test_sample_points_alternate() -> None:
    assert sample_points(5) == [0, 1, -1, 2, -2]


def test_char_poly_of_triangle_adjacency() -> None:
    a = IntMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert char_poly(a) == IntPoly.of((-2, 1)) * IntPoly.of((1, 1)) ** 2


def test_det_pencil_matches_pointwise_determinants() -> None:
    rng = random.Random(11)
    n = 4
    mats = [
        IntMatrix.from_rows([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]) for _ in range(3)
    ]
    p = det_pencil(*mats)
    for t in (-3, 5, 7):
        direct = (mats[0] + mats[1].scale(t) + mats[2].scale(t * t)).det()
        assert p.evaluate(t) == direct


def test_det_pencil_with_executor_is_identical() -> None:
    a = IntMatrix.from_rows([[0, 1, 1, 0], [1, 0, 1, 1], [1, 1, 0, 1], [0, 1, 1, 0]])
    serial = det_pencil(IntMatrix.identity(4), -a, IntMatrix.identity(4))
    with ThreadPoolExecutor(max_workers=3) as executor:
        parallel = det_pencil(IntMatrix.identity(4), -a, IntMatrix.identity(4), executor)
    assert serial == parallel


def test_eval_rational_and_diff() -> None:
    p = IntPoly.of((1, -6))
    assert eval_rational(p, Fraction(1, 3)) == Fraction(-1)
    assert coefficient_diff(p, IntPoly.of((1, -5))) == "u^1: -6 != -5"
    assert coefficient_diff(p, p) == "identical"
