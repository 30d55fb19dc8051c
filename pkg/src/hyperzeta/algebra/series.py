"""Truncated power series used to cross-check zeta reciprocals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Mapping, Sequence, Tuple

from .poly import IntPoly


class SeriesError(ValueError):
    """Raised when a series operation is undefined for its input."""


@dataclass(frozen=True, slots=True)
class RatSeries:
    """Coefficients ``c_0 .. c_order`` of a power series truncated after ``u**order``."""

    order: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise SeriesError("order must be non-negative")
        if len(self.coefficients) != self.order + 1:
            raise SeriesError(
                f"order {self.order} needs {self.order + 1} coefficients, got {len(self.coefficients)}"
            )

    @classmethod
    def from_ints(cls, values: Sequence[int]) -> "RatSeries":
        return cls(len(values) - 1, tuple(Fraction(v) for v in values))

    def __mul__(self, other: "RatSeries") -> "RatSeries":
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coefficients[i]
            if a:
                for j in range(order + 1 - i):
                    out[i + j] += a * other.coefficients[j]
        return RatSeries(order, tuple(out))

    def truncate(self, order: int) -> "RatSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return RatSeries(order, self.coefficients[: order + 1])

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def to_ints(self) -> List[int]:
        if not self.is_integral:
            raise SeriesError("series has non-integer coefficients")
        return [int(c) for c in self.coefficients]


def series_reciprocal(p: IntPoly, order: int) -> RatSeries:
    """Expansion of ``1 / p(u)`` up to ``u**order``; needs ``p(0) == 1``."""
    if p.coefficient(0) != 1:
        raise SeriesError(f"reciprocal needs constant term 1, got {p.coefficient(0)}")
    out = [1]
    for n in range(1, order + 1):
        out.append(-sum(p.coefficient(k) * out[n - k] for k in range(1, min(n, p.degree) + 1)))
    return RatSeries.from_ints(out)


def exp_weighted_counts(counts: Sequence[int], order: int | None = None) -> RatSeries:
    """``exp(sum_m N_m u**m / m)`` truncated; ``counts[m - 1]`` is ``N_m``.

    Uses ``n e_n = sum_{k=1..n} N_k e_{n-k}``, the derivative identity of
    the exponential, so no logarithms or factorials appear.
    """
    order = len(counts) if order is None else order
    if order > len(counts):
        raise SeriesError(f"order {order} needs N_1 .. N_{order}, got {len(counts)} counts")
    e: List[Fraction] = [Fraction(1)]
    for n in range(1, order + 1):
        total = sum(
            (counts[k - 1] * e[n - k] for k in range(1, n + 1)),
            Fraction(0),
        )
        e.append(total / n)
    return RatSeries(order, tuple(e))


def euler_product_truncation(cycle_counts: Mapping[int, int], order: int) -> RatSeries:
    """``prod_l (1 - u**l) ** -c_l`` truncated; ``cycle_counts[l]`` counts prime cycles of length l."""
    result = RatSeries.from_ints([1] + [0] * order)
    for length, count in sorted(cycle_counts.items()):
        if length < 1:
            raise SeriesError(f"cycle length must be positive, got {length}")
        if count == 0 or length > order:
            continue
        factor = [0] * (order + 1)
        for k in range(order // length + 1):
            factor[length * k] = comb(count + k - 1, k)
        result = result * RatSeries.from_ints(factor)
    return result


__all__ = [
    "RatSeries",
    "SeriesError",
    "euler_product_truncation",
    "exp_weighted_counts",
    "series_reciprocal",
]
