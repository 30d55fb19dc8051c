"""Exact real-root location for integer polynomials.

Roots are never approximated in floating point: sympy isolates them in
rational intervals and refines those until each interval sits on one
side of a band ``[c - sqrt(R), c + sqrt(R)]``. Sturm chains give root
counts on half-lines.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy import Poly, QQ, Rational

from .poly import IntPoly

log = logging.getLogger(__name__)

_X = sympy.Symbol("x")
_MAX_REFINEMENTS = 200


class RootIsolationError(RuntimeError):
    """Raised when refinement cannot place a root relative to a band."""


class RootPosition(str, Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"
    NEAR_BOUNDARY = "near-boundary"


@dataclass(frozen=True, slots=True)
class RootInterval:
    """Closed rational interval isolating one real root; ``lower == upper`` when exact."""

    lower: Fraction
    upper: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def __str__(self) -> str:
        if self.is_exact:
            core = str(self.lower)
        else:
            core = f"[{self.lower}, {self.upper}]"
        return core if self.multiplicity == 1 else f"{core} x{self.multiplicity}"


@dataclass(frozen=True, slots=True)
class Band:
    """The closed interval ``center +- sqrt(radicand)``."""

    center: int
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 0:
            raise ValueError("band radicand must be non-negative")

    def g(self, x: Fraction) -> Fraction:
        return (x - self.center) ** 2 - self.radicand

    def contains(self, x: Fraction) -> bool:
        return self.g(x) <= 0

    @property
    def minimal_polynomial(self) -> IntPoly:
        c = self.center
        return IntPoly.of((c * c - self.radicand, -2 * c, 1))

    @property
    def exact_radius(self) -> Optional[int]:
        root = isqrt(self.radicand)
        return root if root * root == self.radicand else None

    def __str__(self) -> str:
        radius = self.exact_radius
        if radius is not None:
            return f"[{self.center - radius}, {self.center + radius}]"
        return f"{self.center} +- sqrt({self.radicand})"


@dataclass(frozen=True, slots=True)
class ClassifiedRoot:
    interval: RootInterval
    position: RootPosition


@dataclass(frozen=True, slots=True)
class RootCensus:
    """Where the roots of a polynomial fall relative to a band (with multiplicity)."""

    degree: int
    inside: int
    boundary: int
    outside: int
    near_boundary: int
    non_real: int
    roots: Tuple[ClassifiedRoot, ...]

    @property
    def real_count(self) -> int:
        return self.degree - self.non_real

    @property
    def all_in_band(self) -> bool:
        return self.outside == 0 and self.near_boundary == 0 and self.non_real == 0


def to_sympy(p: IntPoly) -> Poly:
    return Poly.from_list(list(reversed(p.coefficients)), _X, domain=QQ)


def _fraction(value: Rational) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def root_intervals(p: IntPoly) -> List[RootInterval]:
    """Isolating intervals of the distinct real roots, with multiplicities."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no isolated roots")
    if p.degree == 0:
        return []
    return [
        RootInterval(_fraction(s), _fraction(t), int(k))
        for (s, t), k in to_sympy(p).intervals()
    ]


def _variations(values: Sequence[Rational]) -> int:
    nonzero = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def _chain_values(chain: Sequence[Poly], point: Optional[Fraction], upward: bool) -> List[Rational]:
    if point is not None:
        return [g.eval(_rational(point)) for g in chain]
    if upward:
        return [g.LC() for g in chain]
    return [g.LC() * (-1) ** g.degree() for g in chain]


def sturm_count(p: IntPoly, lower: Optional[Fraction] = None, upper: Optional[Fraction] = None) -> int:
    """Distinct real roots in ``(lower, upper]``; ``None`` means the matching infinity."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no Sturm chain")
    if p.degree == 0:
        return 0
    # square-free, so no chain member vanishes together with p at an endpoint
    chain = to_sympy(p).sqf_part().sturm()
    v_low = _variations(_chain_values(chain, lower, upward=False))
    v_high = _variations(_chain_values(chain, upper, upward=True))
    return v_low - v_high


def negative_root_count(p: IntPoly) -> int:
    """Distinct strictly negative real roots."""
    count = sturm_count(p, None, Fraction(0))
    return count - 1 if p.coefficient(0) == 0 else count


def _strip_boundary(f: Poly, band: Band) -> Tuple[Poly, int]:
    boundary_poly = to_sympy(band.minimal_polynomial)
    removed = 0
    while f.degree() > 0:
        common = f.gcd(boundary_poly)
        if common.degree() == 0:
            break
        removed += common.degree()
        f = f.exquo(common)
    return f, removed


def _place(
    sqf: Poly, interval: RootInterval, band: Band, tolerance: Optional[Fraction]
) -> Tuple[RootInterval, RootPosition]:
    s, t = interval.lower, interval.upper
    tol2 = None if tolerance is None else tolerance * tolerance
    for _ in range(_MAX_REFINEMENTS):
        placed = RootInterval(s, t, interval.multiplicity)
        if s == t:
            g = band.g(s)
            if tol2 is not None and abs(g) < tol2:
                return placed, RootPosition.NEAR_BOUNDARY
            return placed, RootPosition.INSIDE if g < 0 else RootPosition.OUTSIDE
        gs, gt = band.g(s), band.g(t)
        # g is monotone on an interval that stays on one side of the center
        same_side = (s - band.center) * (t - band.center) > 0
        if gs < 0 and gt < 0:
            if tol2 is None or max(gs, gt) <= -tol2:
                return placed, RootPosition.INSIDE
            if same_side and min(gs, gt) > -tol2:
                return placed, RootPosition.NEAR_BOUNDARY
        if gs > 0 and gt > 0 and same_side:
            if tol2 is None or min(gs, gt) >= tol2:
                return placed, RootPosition.OUTSIDE
            if max(gs, gt) < tol2:
                return placed, RootPosition.NEAR_BOUNDARY
        width = t - s
        new_s, new_t = sqf.refine_root(_rational(s), _rational(t), eps=_rational(width / 8))
        s, t = _fraction(new_s), _fraction(new_t)
    raise RootIsolationError(f"could not place the root in [{s}, {t}] relative to band {band}")


def classify_roots(p: IntPoly, band: Band, tolerance: Optional[Fraction] = None) -> RootCensus:
    """Count roots of ``p`` inside, on, and outside ``band``.

    Boundary roots are divided out exactly first. With a ``tolerance``,
    roots on either side whose band function ``|(x - c)**2 - R|`` is below
    ``tolerance**2`` are reported as near-boundary instead.
    """
    if p.is_zero:
        raise ValueError("cannot classify the roots of the zero polynomial")
    f, boundary = _strip_boundary(to_sympy(p), band)
    counts = {position: 0 for position in RootPosition}
    counts[RootPosition.BOUNDARY] = boundary
    classified: List[ClassifiedRoot] = []
    real = boundary
    if f.degree() > 0:
        sqf = f.sqf_part()
        for (s, t), k in f.intervals():
            raw = RootInterval(_fraction(s), _fraction(t), int(k))
            placed, position = _place(sqf, raw, band, tolerance)
            counts[position] += raw.multiplicity
            real += raw.multiplicity
            classified.append(ClassifiedRoot(placed, position))
    census = RootCensus(
        degree=p.degree,
        inside=counts[RootPosition.INSIDE],
        boundary=counts[RootPosition.BOUNDARY],
        outside=counts[RootPosition.OUTSIDE],
        near_boundary=counts[RootPosition.NEAR_BOUNDARY],
        non_real=p.degree - real,
        roots=tuple(classified),
    )
    log.debug("root census against %s: %s", band, census)
    return census


__all__ = [
    "Band",
    "ClassifiedRoot",
    "RootCensus",
    "RootInterval",
    "RootIsolationError",
    "RootPosition",
    "classify_roots",
    "negative_root_count",
    "root_intervals",
    "sturm_count",
    "to_sympy",
]
