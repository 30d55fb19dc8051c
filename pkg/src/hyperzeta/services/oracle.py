"""Brute-force series checks of a zeta reciprocal against cycle counts."""

from __future__ import annotations

import logging

from hyperzeta.algebra.series import (
    euler_product_truncation,
    exp_weighted_counts,
    series_reciprocal,
)
from hyperzeta.linegraph import (
    DEFAULT_MAX_WALKS,
    closed_path_counts,
    enumerate_prime_cycles,
    line_graph_of,
)
from hyperzeta.models import Hypergraph, OracleRow, OracleTable
from hyperzeta.routes.base import prepare_core

from .zeta import zeta_reciprocal

log = logging.getLogger(__name__)


def oracle_table(h: Hypergraph, order: int, max_walks: int = DEFAULT_MAX_WALKS) -> OracleTable:
    """Expand ``zeta`` three ways to ``order``: series, Euler product, trace exponential."""
    if order < 1:
        raise ValueError("order must be at least 1")
    series = series_reciprocal(zeta_reciprocal(h), order)
    core, _ = prepare_core(h)
    if core is None:
        closed = [0] * order
        primes: dict = {}
    else:
        l = line_graph_of(core)
        closed = closed_path_counts(l, order)
        primes = enumerate_prime_cycles(l, order, max_walks)
    euler = euler_product_truncation(primes, order)
    traces = exp_weighted_counts(closed, order)
    table = OracleTable(prime_cycles=dict(primes), closed_paths=tuple(closed))
    for k in range(order + 1):
        table.rows.append(
            OracleRow(
                order=k,
                series=series.coefficients[k],
                euler_product=euler.coefficients[k],
                trace_exponential=traces.coefficients[k],
            )
        )
    if not table.agree:
        bad = [row.order for row in table.rows if not row.agree]
        log.error("series oracle disagrees at orders %s", bad)
    return table


__all__ = ["oracle_table"]
