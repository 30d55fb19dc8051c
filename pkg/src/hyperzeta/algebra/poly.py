"""Integer polynomials and determinants of matrix pencils."""

from __future__ import annotations

import logging
from concurrent.futures import Executor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .matrix import DimensionError, IntMatrix, bareiss_det

log = logging.getLogger(__name__)

Number = Union[int, Fraction]


class InterpolationError(RuntimeError):
    """Raised when interpolated pencil coefficients are not integers."""


class PolynomialDivisionError(ValueError):
    """Raised when an exact polynomial division leaves a remainder."""


class NotEvenError(ValueError):
    """Raised when a polynomial expected to be even has an odd term."""


@dataclass(frozen=True, slots=True)
class IntPoly:
    """Polynomial with integer coefficients, lowest degree first.

    Trailing zeros are stripped; the zero polynomial is ``(0,)``.
    """

    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, coefficients: Iterable[int]) -> "IntPoly":
        return cls(tuple(coefficients))

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, coefficient: int, power: int) -> "IntPoly":
        return cls((0,) * power + (coefficient,))

    @classmethod
    def linear(cls, constant: int, slope: int) -> "IntPoly":
        """``constant + slope * x``."""
        return cls((constant, slope))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Read the space-separated coefficient format written by :meth:`to_text`."""
        tokens = text.split()
        if not tokens:
            raise ValueError("empty polynomial text")
        return cls(tuple(int(token) for token in tokens))

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coefficients)

    def __str__(self) -> str:
        return self.to_text()

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, x: Number) -> Number:
        value: Number = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def shift(self, amount: int) -> "IntPoly":
        """Return ``p(x + amount)``."""
        step = IntPoly.linear(amount, 1)
        result = IntPoly.constant(0)
        for c in reversed(self.coefficients):
            result = result * step + c
        return result

    def divmod(self, divisor: "IntPoly") -> Tuple[List[Fraction], List[Fraction]]:
        """Long division over the rationals; returns (quotient, remainder)."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = [Fraction(c) for c in self.coefficients]
        dd = divisor.degree
        lead = Fraction(divisor.leading)
        if self.degree < dd or self.is_zero:
            return [Fraction(0)], remainder
        quotient = [Fraction(0)] * (self.degree - dd + 1)
        for k in range(self.degree - dd, -1, -1):
            factor = remainder[k + dd] / lead
            quotient[k] = factor
            if factor:
                for j, c in enumerate(divisor.coefficients):
                    remainder[k + j] -= factor * c
        return quotient, remainder[:dd] or [Fraction(0)]

    def divides(self, other: "IntPoly") -> bool:
        """True iff ``self`` divides ``other`` with an integer quotient."""
        quotient, remainder = other.divmod(self)
        return not any(remainder) and all(q.denominator == 1 for q in quotient)

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        quotient, remainder = self.divmod(divisor)
        if any(remainder) or any(q.denominator != 1 for q in quotient):
            raise PolynomialDivisionError(
                f"({divisor.to_text()}) does not divide ({self.to_text()}) exactly"
            )
        return IntPoly(tuple(int(q) for q in quotient))

    def __floordiv__(self, divisor: "IntPoly") -> "IntPoly":
        return self.exact_div(divisor)

    def multiplicity(self, factor: "IntPoly") -> int:
        """Largest ``m`` with ``factor**m`` dividing ``self`` (zero polynomial excluded)."""
        if self.is_zero:
            raise ValueError("multiplicity in the zero polynomial is unbounded")
        if factor.degree < 1:
            raise ValueError("factor must be non-constant")
        count = 0
        current = self
        while factor.divides(current):
            current = current.exact_div(factor)
            count += 1
        return count

    def strip(self, factor: "IntPoly", times: int) -> "IntPoly":
        """Divide out ``factor**times`` exactly."""
        result = self
        for _ in range(times):
            result = result.exact_div(factor)
        return result


def _coerce(value: Union[IntPoly, int]) -> IntPoly:
    return value if isinstance(value, IntPoly) else IntPoly.constant(int(value))


def eval_rational(p: IntPoly, x: Number) -> Fraction:
    return Fraction(p.evaluate(Fraction(x)))


def is_even_poly(p: IntPoly) -> bool:
    return all(c == 0 for c in p.coefficients[1::2])


def substitute_even(p: IntPoly) -> IntPoly:
    """Rewrite an even ``p(t)`` as a polynomial in ``u = t**2``."""
    if not is_even_poly(p):
        odd = [k for k, c in enumerate(p.coefficients) if k % 2 and c]
        raise NotEvenError(f"odd-degree terms at {odd}")
    return IntPoly(p.coefficients[0::2])


def interpolate_integer(xs: Sequence[int], ys: Sequence[int]) -> IntPoly:
    """Newton interpolation over the rationals, insisting on integer output."""
    if len(xs) != len(ys) or not xs:
        raise InterpolationError("need matching, non-empty sample lists")
    n = len(xs)
    table = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - j])
    coeffs: List[Fraction] = [table[n - 1]]
    for i in range(n - 2, -1, -1):
        # coeffs * (x - xs[i]) + table[i]
        shifted = [Fraction(0)] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] -= xs[i] * c
        shifted[0] += table[i]
        coeffs = shifted
    bad = [k for k, c in enumerate(coeffs) if c.denominator != 1]
    if bad:
        raise InterpolationError(f"non-integer interpolated coefficients at degrees {bad}")
    return IntPoly(tuple(int(c) for c in coeffs))


def sample_points(count: int) -> List[int]:
    """0, 1, -1, 2, -2, ... (``count`` of them)."""
    points = [0]
    k = 1
    while len(points) < count:
        points.append(k)
        if len(points) < count:
            points.append(-k)
        k += 1
    return points[:count]


def _pencil_det_at(c0: IntMatrix, c1: IntMatrix, c2: IntMatrix, t: int) -> int:
    t2 = t * t
    n = c0.rows
    rows = [
        [
            c0.entries[i * n + j] + t * c1.entries[i * n + j] + t2 * c2.entries[i * n + j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return bareiss_det(rows)


def det_pencil(
    c0: IntMatrix,
    c1: IntMatrix,
    c2: Optional[IntMatrix] = None,
    executor: Optional[Executor] = None,
) -> IntPoly:
    """Exact ``det(C0 + t*C1 + t**2*C2)`` as a polynomial in ``t``.

    Evaluates at ``deg + 1`` integer points with Bareiss elimination and
    interpolates. Sample determinants may be farmed out to ``executor``.
    """
    n = c0.rows
    c2 = IntMatrix.zeros(n) if c2 is None else c2
    for name, m in (("C0", c0), ("C1", c1), ("C2", c2)):
        if not m.is_square or m.rows != n:
            raise DimensionError(f"pencil coefficient {name} is {m.rows}x{m.cols}, expected {n}x{n}")
    if n == 0:
        return IntPoly.one()
    if not c2.is_zero():
        bound = 2 * n
    elif not c1.is_zero():
        bound = n
    else:
        bound = 0
    points = sample_points(bound + 1)
    log.debug("det_pencil n=%d degree bound=%d", n, bound)
    if executor is None:
        values = [_pencil_det_at(c0, c1, c2, t) for t in points]
    else:
        futures = [executor.submit(_pencil_det_at, c0, c1, c2, t) for t in points]
        values = [f.result() for f in futures]
    return interpolate_integer(points, values)


def char_poly(m: IntMatrix, executor: Optional[Executor] = None) -> IntPoly:
    """``det(x*I - M)``."""
    if not m.is_square:
        raise DimensionError(f"characteristic polynomial needs a square matrix, got {m.rows}x{m.cols}")
    return det_pencil(-m, IntMatrix.identity(m.rows), None, executor)


def coefficient_diff(a: IntPoly, b: IntPoly) -> str:
    """Human-readable list of the coefficients where ``a`` and ``b`` differ."""
    size = max(len(a.coefficients), len(b.coefficients))
    parts = [
        f"u^{k}: {a.coefficient(k)} != {b.coefficient(k)}"
        for k in range(size)
        if a.coefficient(k) != b.coefficient(k)
    ]
    return "; ".join(parts) if parts else "identical"


__all__ = [
    "IntPoly",
    "InterpolationError",
    "NotEvenError",
    "PolynomialDivisionError",
    "char_poly",
    "coefficient_diff",
    "det_pencil",
    "eval_rational",
    "interpolate_integer",
    "is_even_poly",
    "sample_points",
    "substitute_even",
]
