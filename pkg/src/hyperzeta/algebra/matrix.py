"""Exact integer matrices and fraction-free determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple


class DimensionError(ValueError):
    """Raised when matrix shapes do not fit the requested operation."""


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Row-major matrix of arbitrary-precision integers.

    A 0x0 matrix is admitted so an empty line graph still has a (trivial)
    Perron-Frobenius matrix; its determinant is 1.
    """

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative dimensions {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        height = len(rows)
        width = len(rows[0]) if height else 0
        flat: List[int] = []
        for index, row in enumerate(rows):
            if len(row) != width:
                raise DimensionError(f"row {index} has {len(row)} entries, expected {width}")
            flat.extend(int(value) for value in row)
        return cls(height, width, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "IntMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Iterable[int]) -> "IntMatrix":
        values = list(values)
        n = len(values)
        flat = [0] * (n * n)
        for i, value in enumerate(values):
            flat[i * n + i] = int(value)
        return cls(n, n, tuple(flat))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)]
        ) if self.rows else IntMatrix(self.cols, 0, ())

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def row_sums(self) -> List[int]:
        return [sum(self.row(i)) for i in range(self.rows)]

    def col_sums(self) -> List[int]:
        return [sum(self[i, j] for i in range(self.rows)) for j in range(self.cols)]

    def diagonal_entries(self) -> List[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def scale(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(factor * v for v in self.entries))

    def shift_diagonal(self, amount: int) -> "IntMatrix":
        """Return ``self + amount * I``."""
        self._require_square("shift_diagonal")
        return self + IntMatrix.identity(self.rows).scale(amount)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._require_same_shape(other)
        return IntMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._require_same_shape(other)
        return IntMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [other.column(j) for j in range(other.cols)]
        flat: List[int] = []
        for i in range(self.rows):
            row = self.row(i)
            flat.extend(sum(a * b for a, b in zip(row, col)) for col in columns)
        return IntMatrix(self.rows, other.cols, tuple(flat))

    def column(self, j: int) -> Tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def det(self) -> int:
        self._require_square("det")
        return bareiss_det(self.to_rows())

    def _require_square(self, operation: str) -> None:
        if not self.is_square:
            raise DimensionError(f"{operation} needs a square matrix, got {self.rows}x{self.cols}")

    def _require_same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination.

    Every intermediate division is exact, so entries stay integers and
    grow only like the minors they represent.
    """
    m = [list(row) for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = m[k]
        pivot = pivot_row[k]
        tail = pivot_row[k + 1 :]
        for i in range(k + 1, n):
            row = m[i]
            factor = row[k]
            m[i] = row[: k + 1] + [
                (pivot * a - factor * b) // previous for a, b in zip(row[k + 1 :], tail)
            ]
        previous = pivot
    return sign * m[n - 1][n - 1]


def cofactor_det(rows: Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row; an oracle for small matrices."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, value in enumerate(rows[0]):
        if value == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in (list(r) for r in rows[1:])]
        total += (-1) ** j * value * cofactor_det(minor)
    return total


__all__ = ["DimensionError", "IntMatrix", "bareiss_det", "cofactor_det"]
