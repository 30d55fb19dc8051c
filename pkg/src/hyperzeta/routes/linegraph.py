"""Zeta reciprocal as ``det(I - uT)`` over the oriented line graph."""

from __future__ import annotations

import logging
from concurrent.futures import Executor
from typing import List, Optional

from hyperzeta.algebra.matrix import IntMatrix
from hyperzeta.algebra.poly import det_pencil
from hyperzeta.linegraph import is_strongly_connected, line_graph_of, perron_frobenius_matrix
from hyperzeta.models import Hypergraph, Route, ZetaResult

from .base import ZetaRoute

log = logging.getLogger(__name__)


class LineGraphRoute(ZetaRoute):
    route = Route.LINE_GRAPH

    def __init__(self, orientation: Optional[int] = None, executor: Optional[Executor] = None) -> None:
        super().__init__(executor)
        self.orientation = orientation

    def _compute(self, core: Hypergraph, warnings: List[str]) -> ZetaResult:
        l = line_graph_of(core, self.orientation)
        if not is_strongly_connected(l):
            message = "line graph is not strongly connected"
            log.warning(message)
            warnings.append(message)
        t = perron_frobenius_matrix(l)
        n = t.rows
        reciprocal = det_pencil(IntMatrix.identity(n), -t, None, self._executor)
        return ZetaResult(reciprocal, self.route, tuple(warnings))


__all__ = ["LineGraphRoute"]
