"""Hashimoto factorisation for (d, r)-regular hypergraphs.

With ``d >= r`` (dualising first otherwise) and ``q = (d-1)(r-1)``:

    1/zeta = (1-u)^(-chi) (1+(r-1)u)^(n2-n1) det(I - (A - r + 2)u + q u^2)

over the hypervertices, and equivalently over the hyperedges with the dual
adjacency, ``d`` and an exact division by ``(1+(d-1)u)^(n2-n1)``.
"""

from __future__ import annotations

import logging
from concurrent.futures import Executor
from typing import List, Optional

from hyperzeta.algebra.matrix import IntMatrix
from hyperzeta.algebra.poly import IntPoly, det_pencil
from hyperzeta.hypergraph import (
    adjacency_of_hypergraph,
    dual_of,
    euler_chi_bipartite,
    regular_shape,
)
from hyperzeta.models import Hypergraph, RegularShape, Route, ZetaResult

from .base import ZetaRoute

log = logging.getLogger(__name__)


class HashimotoExponentError(RuntimeError):
    """Raised when a prefactor exponent comes out negative or inconsistent."""


def oriented_regular(h: Hypergraph) -> tuple[Hypergraph, RegularShape, bool]:
    """Return ``h`` or its dual so that ``d >= r``, with the shape and whether it was dualised."""
    shape = regular_shape(h)
    if shape.d < shape.r:
        dual = dual_of(h)
        return dual, regular_shape(dual), True
    return h, shape, False


def hashimoto_determinant(adjacency: IntMatrix, order: int, q: int, executor: Optional[Executor] = None) -> IntPoly:
    """``det(I - (A - order + 2)u + q u^2)``."""
    n = adjacency.rows
    identity = IntMatrix.identity(n)
    return det_pencil(identity, -adjacency.shift_diagonal(2 - order), identity.scale(q), executor)


class HashimotoRoute(ZetaRoute):
    """``form=1`` factors over hypervertices, ``form=2`` over hyperedges."""

    def __init__(self, form: int = 1, executor: Optional[Executor] = None) -> None:
        if form not in (1, 2):
            raise ValueError(f"Hashimoto form must be 1 or 2, got {form}")
        super().__init__(executor)
        self.form = form
        self.route = Route.HASHIMOTO_1 if form == 1 else Route.HASHIMOTO_2

    def _compute(self, core: Hypergraph, warnings: List[str]) -> ZetaResult:
        h, shape, dualized = oriented_regular(core)
        if dualized:
            warnings.append("d < r: factored the dual hypergraph")
        minus_chi = -euler_chi_bipartite(h)
        if minus_chi != shape.minus_chi or minus_chi != shape.n2 * (shape.r - 1) - shape.n1:
            raise HashimotoExponentError(f"inconsistent Euler number {-minus_chi} for {shape}")
        surplus = shape.n2 - shape.n1
        if minus_chi < 0 or surplus < 0:
            raise HashimotoExponentError(
                f"negative prefactor exponent: -chi={minus_chi}, n2-n1={surplus}"
            )
        one_minus_u = IntPoly.of((1, -1)) ** minus_chi
        if self.form == 1:
            det = hashimoto_determinant(adjacency_of_hypergraph(h), shape.r, shape.q, self._executor)
            reciprocal = one_minus_u * IntPoly.of((1, shape.r - 1)) ** surplus * det
        else:
            det = hashimoto_determinant(
                adjacency_of_hypergraph(dual_of(h)), shape.d, shape.q, self._executor
            )
            reciprocal = (one_minus_u * det).exact_div(IntPoly.of((1, shape.d - 1)) ** surplus)
        log.debug("hashimoto form %d for %s", self.form, shape)
        return ZetaResult(reciprocal, self.route, tuple(warnings))


__all__ = ["HashimotoExponentError", "HashimotoRoute", "hashimoto_determinant", "oriented_regular"]
