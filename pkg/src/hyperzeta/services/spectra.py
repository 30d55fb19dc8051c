"""Characteristic polynomials, the Ramanujan condition and where zeta's zeros lie."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

from hyperzeta.algebra.poly import IntPoly, PolynomialDivisionError, char_poly
from hyperzeta.algebra.roots import (
    Band,
    RootInterval,
    RootPosition,
    classify_roots,
    negative_root_count,
    root_intervals,
)
from hyperzeta.hypergraph import (
    DisconnectedError,
    adjacency_of_hypergraph,
    bipartite_adjacency,
    dual_of,
    incidence_matrix,
    is_connected,
    regular_shape,
)
from hyperzeta.models import (
    AlonBoppanaBound,
    CharRelations,
    DetPartRoot,
    Hypergraph,
    ObviousEigenvalue,
    PoleClass,
    PoleReport,
    RamanujanVerdict,
    RegularShape,
    Side,
    SpectralReport,
)
from hyperzeta.routes.hashimoto import oriented_regular

from .zeta import zeta_reciprocal

log = logging.getLogger(__name__)


class ConsistencyError(RuntimeError):
    """Raised when two criteria that must coincide give different answers."""


def verify_char_relations(h: Hypergraph) -> CharRelations:
    """Check the squared-adjacency identities and the two char-poly relations exactly."""
    shape = regular_shape(h)
    m = incidence_matrix(h)
    a = adjacency_of_hypergraph(h)
    a_dual = adjacency_of_hypergraph(dual_of(h))
    eq2 = (m @ m.transpose() == a.shift_diagonal(shape.d)) and (
        m.transpose() @ m == a_dual.shift_diagonal(shape.r)
    )
    p = char_poly(a)
    p_dual = char_poly(a_dual)
    b = bipartite_adjacency(h)
    q_squared = char_poly(b @ b)
    shifted_p = p.shift(-shape.d)
    shifted_dual = p_dual.shift(-shape.r)
    eq3 = q_squared == shifted_p * shifted_dual
    eq4 = IntPoly.monomial(1, shape.n1) * shifted_dual == IntPoly.monomial(1, shape.n2) * shifted_p
    return CharRelations(p=p, p_dual=p_dual, q_squared=q_squared, eq2=eq2, eq3=eq3, eq4=eq4)


def squared_adjacency_negative_roots(h: Hypergraph) -> int:
    """Distinct negative eigenvalues of the squared incidence-graph adjacency (always 0)."""
    b = bipartite_adjacency(h)
    return negative_root_count(char_poly(b @ b))


def obvious_eigenvalues(h: Hypergraph) -> Optional[ObviousEigenvalue]:
    shape = regular_shape(h)
    if shape.d < shape.r:
        return ObviousEigenvalue(-shape.d, shape.n1 - shape.n2, Side.HYPERGRAPH)
    if shape.r < shape.d:
        return ObviousEigenvalue(-shape.r, shape.n2 - shape.n1, Side.DUAL)
    return None


def alon_boppana_bound(d: int, r: int) -> AlonBoppanaBound:
    """``r - 2 + 2 sqrt((d-1)(r-1))`` as exact data."""
    if d < 2 or r < 2:
        raise ValueError(f"the bound needs d, r >= 2, got ({d}, {r})")
    return AlonBoppanaBound(r - 2, 4 * (d - 1) * (r - 1))


def _require_connected(h: Hypergraph) -> None:
    if not is_connected(h):
        raise DisconnectedError("operation needs a connected hypergraph")


def _strip_trivial(p: IntPoly, trivial: int) -> IntPoly:
    """Divide out ``x - trivial`` exactly once, insisting it was a simple root."""
    factor = IntPoly.of((-trivial, 1))
    try:
        stripped = p.exact_div(factor)
    except PolynomialDivisionError as exc:
        raise DisconnectedError(f"{trivial} is not an adjacency eigenvalue") from exc
    if stripped.evaluate(trivial) == 0:
        raise DisconnectedError(f"eigenvalue {trivial} is repeated; the hypergraph is disconnected")
    return stripped


def ramanujan_check(h: Hypergraph, tolerance: Optional[Fraction] = None) -> SpectralReport:
    """Decide whether every non-obvious, non-trivial eigenvalue lies in the Ramanujan band."""
    shape = regular_shape(h)
    _require_connected(h)
    p = char_poly(adjacency_of_hypergraph(h))
    trivial = shape.d * (shape.r - 1)
    stripped = _strip_trivial(p, trivial)
    obvious = obvious_eigenvalues(h)
    if obvious is not None and obvious.side is Side.HYPERGRAPH:
        stripped = stripped.strip(IntPoly.of((-obvious.value, 1)), obvious.multiplicity)
    bound = alon_boppana_bound(shape.d, shape.r)
    census = classify_roots(stripped, bound.band, tolerance)
    warnings: List[str] = []
    if census.outside:
        verdict = RamanujanVerdict.NO
    elif census.near_boundary:
        verdict = RamanujanVerdict.BOUNDARY_WITHIN_TOLERANCE
        message = f"{census.near_boundary} eigenvalues lie within tolerance {tolerance} of the band boundary"
        log.warning(message)
        warnings.append(message)
    else:
        verdict = RamanujanVerdict.YES
    return SpectralReport(
        char_poly=p,
        d=shape.d,
        r=shape.r,
        q=shape.q,
        obvious=obvious,
        lambda1=RootInterval(Fraction(trivial), Fraction(trivial), 1),
        root_intervals=tuple(root_intervals(p)),
        lambda2_bound_check=census,
        ramanujan=verdict,
        alon_boppana=bound,
        warnings=tuple(warnings),
    )


def pole_audit(h: Hypergraph) -> PoleReport:
    """Exact pole multiplicities of zeta and the moduli of its determinant-part zeros."""
    oriented, shape, dualized = oriented_regular(h)
    reciprocal = zeta_reciprocal(oriented)
    one_minus_u = IntPoly.of((1, -1))
    one_plus = IntPoly.of((1, shape.r - 1))
    p = char_poly(adjacency_of_hypergraph(oriented))
    trivial = shape.d * (shape.r - 1)
    band = Band(shape.r - 2, 4 * shape.q)

    roots: List[DetPartRoot] = []
    remaining = p
    if p.evaluate(trivial) == 0:
        remaining = p.exact_div(IntPoly.of((-trivial, 1)))
        roots.append(
            DetPartRoot(RootInterval(Fraction(trivial), Fraction(trivial), 1), PoleClass.TRIVIAL)
        )
    if remaining.degree > 0:
        census = classify_roots(remaining, band)
        for root in census.roots:
            on_circle = root.position in (RootPosition.INSIDE, RootPosition.BOUNDARY)
            roots.append(
                DetPartRoot(root.interval, PoleClass.ON_CIRCLE if on_circle else PoleClass.OFF_CIRCLE)
            )
        if census.boundary:
            roots.extend(_boundary_roots(remaining, band))
    return PoleReport(
        shape=shape,
        dualized=dualized,
        prefactor_mult_at_1=shape.minus_chi,
        mult_at_1=reciprocal.multiplicity(one_minus_u),
        prefactor_mult_at_neg_inv_r_minus_1=shape.n2 - shape.n1,
        mult_at_neg_inv_r_minus_1=reciprocal.multiplicity(one_plus) if shape.r > 1 else 0,
        det_part_roots=tuple(roots),
    )


def _boundary_roots(p: IntPoly, band: Band) -> List[DetPartRoot]:
    """Eigenvalues exactly on the band edge; their zeros sit on the critical circle."""
    radius = band.exact_radius
    if radius is not None:
        edges = sorted({band.center - radius, band.center + radius})
        candidates = [
            (IntPoly.of((-value, 1)), [RootInterval(Fraction(value), Fraction(value))])
            for value in edges
        ]
    else:
        candidates = [(band.minimal_polynomial, root_intervals(band.minimal_polynomial))]
    found: List[DetPartRoot] = []
    for factor, intervals in candidates:
        if factor.divides(p):
            count = p.multiplicity(factor)
            found.extend(
                DetPartRoot(RootInterval(i.lower, i.upper, count), PoleClass.ON_CIRCLE)
                for i in intervals
            )
    return found


def reduce_symmetric(r_poly: IntPoly, q: int) -> IntPoly:
    """Find ``S`` with ``R(u) = u^m S(qu + 1/u)`` where ``deg R = 2m``."""
    if r_poly.degree % 2:
        raise ConsistencyError(f"odd degree {r_poly.degree} cannot be symmetric")
    m = r_poly.degree // 2
    rest = [Fraction(c) for c in r_poly.coefficients]
    s = [Fraction(0)] * (m + 1)
    for k in range(m, -1, -1):
        coefficient = rest[m + k] / q**k
        s[k] = coefficient
        if coefficient:
            for j in range(k + 1):
                rest[m - k + 2 * j] -= coefficient * comb(k, j) * q**j
    if any(rest) or any(c.denominator != 1 for c in s):
        raise ConsistencyError("reciprocal is not symmetric under u -> 1/(qu)")
    return IntPoly(tuple(int(c) for c in s))


def reduced_zeta_polynomial(h: Hypergraph) -> Tuple[IntPoly, RegularShape]:
    """The determinant part of ``1/zeta`` without its trivial factor, in ``w = qu + 1/u``."""
    oriented, shape, _ = oriented_regular(h)
    reciprocal = zeta_reciprocal(oriented)
    core = reciprocal.strip(IntPoly.of((1, -1)), shape.minus_chi)
    core = core.strip(IntPoly.of((1, shape.r - 1)), shape.n2 - shape.n1)
    core = core.exact_div(IntPoly.of((1, -1)) * IntPoly.of((1, -shape.q)))
    return reduce_symmetric(core, shape.q), shape


def riemann_hypothesis_check(h: Hypergraph) -> bool:
    """Do all non-trivial zeros of ``1/zeta`` satisfy ``|u| = q^(-1/2)``?

    Each quadratic factor ``1 - cu + qu^2`` has both zeros on that circle
    exactly when ``c^2 <= 4q``, so the test runs on the reduced polynomial
    in ``w``. The verdict must match :func:`ramanujan_check`.
    """
    regular_shape(h)
    _require_connected(h)
    s, shape = reduced_zeta_polynomial(h)
    holds = classify_roots(s, Band(0, 4 * shape.q)).all_in_band if s.degree > 0 else True
    spectral = ramanujan_check(h)
    ramanujan = spectral.ramanujan is RamanujanVerdict.YES
    if holds != ramanujan:
        raise ConsistencyError(
            f"Riemann hypothesis {holds} disagrees with Ramanujan verdict {spectral.ramanujan.value}"
        )
    return holds


__all__ = [
    "ConsistencyError",
    "alon_boppana_bound",
    "char_poly",
    "obvious_eigenvalues",
    "pole_audit",
    "ramanujan_check",
    "reduce_symmetric",
    "reduced_zeta_polynomial",
    "riemann_hypothesis_check",
    "squared_adjacency_negative_roots",
    "verify_char_relations",
]
