"""Shared validation and leaf pruning for the zeta routes."""

from __future__ import annotations

import logging
import time
from concurrent.futures import Executor
from typing import List, Optional, Tuple

from hyperzeta.algebra.poly import IntPoly
from hyperzeta.hypergraph import prune_leaves, validate
from hyperzeta.models import Hypergraph, Route, ZetaResult

log = logging.getLogger(__name__)


class ValidationError(ValueError):
    """Raised when a hypergraph cannot be fed to a zeta route."""


def prepare_core(h: Hypergraph) -> Tuple[Optional[Hypergraph], List[str]]:
    """Check connectivity, then strip leaves; ``None`` means nothing survives."""
    report = validate(h)
    if not report.connected:
        raise ValidationError("zeta routes need a connected hypergraph")
    warnings: List[str] = []
    pruned = prune_leaves(h)
    if pruned.changed:
        warnings.append(
            f"pruned {pruned.removed_vertices} degree-1 vertices and "
            f"{pruned.removed_hyperedges} hyperedges before computing"
        )
    if pruned.hypergraph is None:
        warnings.append("nothing survives leaf pruning; there are no prime cycles")
    for message in warnings:
        log.warning(message)
    return pruned.hypergraph, warnings


class ZetaRoute:
    """Base class: subclasses turn a pruned, connected core into ``1 / zeta(u)``."""

    route: Route

    def __init__(self, executor: Optional[Executor] = None) -> None:
        self._executor = executor

    def compute(self, h: Hypergraph) -> ZetaResult:
        core, warnings = prepare_core(h)
        if core is None:
            return ZetaResult(IntPoly.one(), self.route, tuple(warnings))
        started = time.perf_counter()
        result = self._compute(core, warnings)
        log.info(
            "%s route: degree %d in %.3fs",
            self.route.value,
            result.reciprocal.degree,
            time.perf_counter() - started,
        )
        return result

    def _compute(self, core: Hypergraph, warnings: List[str]) -> ZetaResult:  # pragma: no cover
        raise NotImplementedError


__all__ = ["ValidationError", "ZetaRoute", "prepare_core"]
