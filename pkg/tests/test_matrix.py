from __future__ import annotations

import random

import pytest

from hyperzeta.algebra.matrix import DimensionError, IntMatrix, bareiss_det, cofactor_det


def test_empty_matrix_has_unit_determinant() -> None:
    assert IntMatrix.zeros(0).det() == 1
    assert bareiss_det([]) == 1


def test_bareiss_matches_cofactor_expansion() -> None:
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(rows) == cofactor_det(rows)


def test_bareiss_pivots_past_zero_diagonal() -> None:
    rows = [[0, 1, 0], [1, 0, 0], [0, 0, 5]]
    assert bareiss_det(rows) == -5


def test_singular_matrix() -> None:
    assert IntMatrix.from_rows([[1, 2], [2, 4]]).det() == 0


def test_large_entries_stay_exact() -> None:
    big = 10**30
    m = IntMatrix.from_rows([[big, 1], [1, big]])
    assert m.det() == big * big - 1


def test_arithmetic() -> None:
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.identity(2)
    assert (a @ b) == a
    assert (a + b).to_rows() == [[2, 2], [3, 5]]
    assert (a - b).to_rows() == [[0, 2], [3, 3]]
    assert a.shift_diagonal(-1) == a - b
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]
    assert (-a).scale(-1) == a
    assert a.row_sums() == [3, 7]
    assert a.col_sums() == [4, 6]


def test_shape_errors() -> None:
    with pytest.raises(DimensionError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(DimensionError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionError):
        IntMatrix.zeros(2, 3).det()
    with pytest.raises(DimensionError):
        IntMatrix.zeros(2, 3) @ IntMatrix.zeros(2, 3)


def test_symmetry() -> None:
    assert IntMatrix.from_rows([[0, 1], [1, 0]]).is_symmetric()
    assert not IntMatrix.from_rows([[0, 1], [0, 0]]).is_symmetric()
