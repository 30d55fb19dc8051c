from __future__ import annotations

import pytest

from hyperzeta.algebra.series import exp_weighted_counts, series_reciprocal
from hyperzeta.linegraph import EnumerationTooLargeError, closed_path_counts, line_graph_of
from hyperzeta.models import Hypergraph
from hyperzeta.services.oracle import oracle_table
from hyperzeta.services.zeta import zeta_reciprocal


def test_k4_collapsed_oracle_through_order_ten(k4_collapsed) -> None:
    table = oracle_table(k4_collapsed, 10)
    assert table.agree
    assert len(table.rows) == 11
    assert table.rows[3].series == 6
    assert table.prime_cycles[3] == 6
    assert table.closed_paths[2] == 18
    assert all(length % 3 == 0 for length in table.prime_cycles)


def test_oracle_on_fixtures(fixture) -> None:
    for name in ("k4", "mixed5", "prism6", "petersen"):
        assert oracle_table(fixture(name), 8).agree


def test_oracle_on_random_hypergraphs(random_instances) -> None:
    # prime-cycle enumeration grows exponentially with the order
    for h in random_instances(50, max_vertices=6, max_edges=4, max_order=3):
        assert oracle_table(h, 6).agree


@pytest.mark.slow
def test_trace_identity_through_order_twelve(random_instances) -> None:
    for h in random_instances(20, max_vertices=6, max_edges=4, max_order=3):
        series = series_reciprocal(zeta_reciprocal(h), 12)
        traces = exp_weighted_counts(closed_path_counts(line_graph_of(h), 12), 12)
        assert series.coefficients == traces.coefficients


def test_tree_has_no_cycles() -> None:
    table = oracle_table(Hypergraph.from_edges(3, [[0, 1], [1, 2]]), 4)
    assert table.agree
    assert table.prime_cycles == {}
    assert [row.series for row in table.rows] == [1, 0, 0, 0, 0]


def test_walk_budget_is_enforced(fixture) -> None:
    with pytest.raises(EnumerationTooLargeError):
        oracle_table(fixture("petersen"), 12, max_walks=50)


def test_order_must_be_positive(k4_collapsed) -> None:
    with pytest.raises(ValueError):
        oracle_table(k4_collapsed, 0)
