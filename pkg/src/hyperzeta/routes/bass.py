"""Zeta reciprocal from the incidence graph's Ihara determinant, with ``t**2 = u``."""

from __future__ import annotations

from typing import List

from hyperzeta.algebra.matrix import IntMatrix
from hyperzeta.algebra.poly import IntPoly, det_pencil, substitute_even
from hyperzeta.hypergraph import bipartite_adjacency, bipartite_q_matrix, euler_chi_bipartite
from hyperzeta.models import Hypergraph, Route, ZetaResult

from .base import ZetaRoute


class BassRoute(ZetaRoute):
    route = Route.BASS

    def _compute(self, core: Hypergraph, warnings: List[str]) -> ZetaResult:
        a = bipartite_adjacency(core)
        q = bipartite_q_matrix(core)
        det = det_pencil(IntMatrix.identity(a.rows), -a, q, self._executor)
        minus_chi = -euler_chi_bipartite(core)
        if minus_chi < 0:
            raise RuntimeError(f"pruned core has positive Euler number {-minus_chi}")
        bipartite = IntPoly.of((1, 0, -1)) ** minus_chi * det
        # raises NotEvenError: the incidence graph only has even closed walks
        reciprocal = substitute_even(bipartite)
        return ZetaResult(reciprocal, self.route, tuple(warnings), bipartite_reciprocal=bipartite)


__all__ = ["BassRoute"]
