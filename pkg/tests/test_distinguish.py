from __future__ import annotations

import pytest

from hyperzeta.algebra.poly import IntPoly
from hyperzeta.linegraph import clique_expand, closed_path_counts, line_graph_of, oriented_line_graph
from hyperzeta.models import CollapseMode, DistinguishVerdict, Hypergraph
from hyperzeta.services.distinguish import (
    CliqueError,
    GraphError,
    adjacency_char_poly,
    collapse,
    collapse_choices,
    collapse_family,
    distinguish,
    enumerate_cliques,
    ihara_zeta_graph,
    invariant_multiset,
)
from hyperzeta.services.zeta import zeta_reciprocal

K4_COLLAPSED_GOLDEN = IntPoly.parse("1 0 0 -6 0 0 9 0 0 -4")


def test_enumerate_triangles(fixture) -> None:
    assert enumerate_cliques(fixture("k4"), 3) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert enumerate_cliques(fixture("k4"), 4) == [(0, 1, 2, 3)]
    assert enumerate_cliques(fixture("c5"), 3) == []
    with pytest.raises(CliqueError):
        enumerate_cliques(fixture("k4"), 2)
    with pytest.raises(GraphError):
        enumerate_cliques(fixture("k4_collapsed"), 3)


def test_duplicate_edges_are_not_a_graph() -> None:
    with pytest.raises(GraphError):
        enumerate_cliques(Hypergraph.from_edges(2, [[0, 1], [0, 1]]), 3)


def test_collapsing_a_k4_triangle_gives_k4_collapsed(fixture) -> None:
    family = collapse_family(fixture("k4"), [[2, 1, 0]])
    assert family.cliques == ((0, 1, 2),)
    assert family.result.orders == [2, 2, 2, 3]
    assert zeta_reciprocal(family.result) == K4_COLLAPSED_GOLDEN


def test_collapse_rejects_non_cliques(fixture) -> None:
    with pytest.raises(CliqueError):
        collapse(fixture("c4"), [[0, 1, 2]])


def test_overlapping_cliques_share_edges_once(fixture) -> None:
    result = collapse(fixture("k4"), [[0, 1, 2], [0, 1, 3]])
    assert result.hyperedges == ((2, 3), (0, 1, 2), (0, 1, 3))


def test_collapse_modes_on_k4(fixture) -> None:
    k4 = fixture("k4")
    assert len(collapse_choices(k4, 3, CollapseMode.ALL_SINGLETONS)) == 4
    # triangles of K4 pairwise share an edge
    assert collapse_choices(k4, 3, CollapseMode.DISJOINT_PAIRS) == [
        ((0, 1, 2),),
        ((0, 1, 3),),
        ((0, 2, 3),),
        ((1, 2, 3),),
    ]
    assert len(collapse_choices(k4, 3, CollapseMode.ALL_CLIQUES_AT_ONCE)[0]) == 4
    with pytest.raises(CliqueError):
        collapse_choices(k4, 3, CollapseMode.EXPLICIT)


def test_disjoint_pairs_on_two_separate_triangles() -> None:
    # two triangles joined by a path
    g = Hypergraph.from_edges(6, [[0, 1], [1, 2], [0, 2], [2, 3], [3, 4], [4, 5], [3, 5]])
    assert collapse_choices(g, 3, CollapseMode.DISJOINT_PAIRS) == [((0, 1, 2), (3, 4, 5))]


def test_invariant_multiset_is_canonical(fixture) -> None:
    k4 = fixture("k4")
    multiset = invariant_multiset(k4, 3, CollapseMode.ALL_SINGLETONS)
    assert multiset.choices == 4
    assert multiset.polynomials == (K4_COLLAPSED_GOLDEN,) * 4
    explicit = invariant_multiset(k4, 3, CollapseMode.EXPLICIT, [[[0, 1, 2]]])
    assert explicit.polynomials == (K4_COLLAPSED_GOLDEN,)


def test_triangle_free_graph_falls_back_to_ihara(fixture) -> None:
    c5 = fixture("c5")
    multiset = invariant_multiset(c5, 3, CollapseMode.DISJOINT_PAIRS)
    assert multiset.polynomials == (ihara_zeta_graph(c5),)
    assert ihara_zeta_graph(c5) == IntPoly.of((1, 0, 0, 0, 0, -1)) ** 2


def test_ihara_matches_hypergraph_zeta(fixture) -> None:
    for name in ("k4", "petersen", "cospectral_a"):
        g = fixture(name)
        assert ihara_zeta_graph(g) == zeta_reciprocal(g)


def test_cospectral_pair_with_different_ihara(fixture) -> None:
    a, b = fixture("cospectral_a"), fixture("cospectral_b")
    assert adjacency_char_poly(a) == adjacency_char_poly(b)
    report = distinguish(a, b, 3, CollapseMode.ALL_SINGLETONS)
    assert report.cospectral
    assert not report.same_ihara
    assert ihara_zeta_graph(a).degree == 16
    assert ihara_zeta_graph(b).degree == 14


def test_different_graphs_are_distinguished(fixture) -> None:
    report = distinguish(fixture("c4"), fixture("c5"), 3, CollapseMode.DISJOINT_PAIRS)
    assert report.verdict is DistinguishVerdict.DISTINGUISHED
    same = distinguish(fixture("k4"), fixture("k4"), 3, CollapseMode.ALL_SINGLETONS)
    assert same.verdict is DistinguishVerdict.NOT_DISTINGUISHED


@pytest.mark.slow
def test_stark_terras_pair(fixture) -> None:
    x1, x2 = fixture("stark_terras_x1"), fixture("stark_terras_x2")
    assert adjacency_char_poly(x1) == adjacency_char_poly(x2)
    ihara = ihara_zeta_graph(x1)
    assert ihara == ihara_zeta_graph(x2)
    assert ihara.coefficient(3) == -8

    red = invariant_multiset(x1, 3, CollapseMode.EXPLICIT, [[[4, 6, 7], [12, 13, 15]]])
    second = invariant_multiset(x2, 3, CollapseMode.DISJOINT_PAIRS)
    assert second.choices == 4
    assert len(set(second.polynomials)) == 1
    assert red.polynomials[0] != second.polynomials[0]

    report = distinguish(x1, x2, 3, CollapseMode.DISJOINT_PAIRS)
    assert report.first.choices == 4
    assert report.cospectral and report.same_ihara
    assert report.verdict is DistinguishVerdict.DISTINGUISHED

    every = distinguish(x1, x2, 3, CollapseMode.ALL_CLIQUES_AT_ONCE)
    assert (every.first.choices, every.second.choices) == (1, 1)
    assert every.verdict is DistinguishVerdict.DISTINGUISHED


def _closed_walks_avoiding_clique_pairs(g: Hypergraph, cliques, length: int) -> int:
    """Closed non-backtracking walks of ``g`` never taking two cyclically consecutive steps in one clique."""
    expanded = clique_expand(g)
    succ = oriented_line_graph(expanded).successors()
    arcs = expanded.arcs

    def clique_of(index: int):
        ends = {arcs[index].origin, arcs[index].terminus}
        return next((i for i, clique in enumerate(cliques) if ends <= set(clique)), None)

    def allowed(a: int, b: int) -> bool:
        owner = clique_of(a)
        return owner is None or owner != clique_of(b)

    total = 0

    def extend(first: int, current: int, steps: int) -> None:
        nonlocal total
        if steps == length:
            total += first in succ[current] and allowed(current, first)
            return
        for nxt in succ[current]:
            if allowed(current, nxt):
                extend(first, nxt, steps + 1)

    for first in range(len(arcs)):
        extend(first, first, 1)
    return total


def test_prism_triangles_collapse(fixture) -> None:
    prism = fixture("prism6")
    assert enumerate_cliques(prism, 3) == [(0, 1, 2), (3, 4, 5)]
    both = collapse(prism, [[0, 1, 2], [3, 4, 5]])
    assert sorted(both.orders) == [2, 2, 2, 3, 3]
    assert invariant_multiset(prism, 3, CollapseMode.ALL_CLIQUES_AT_ONCE).polynomials == (zeta_reciprocal(both),)
    assert zeta_reciprocal(both).degree == 12
    # the triangles were the only closed paths of length 3
    assert closed_path_counts(line_graph_of(prism), 3)[2] == 12
    assert closed_path_counts(line_graph_of(both), 3)[2] == 0


@pytest.mark.parametrize("cliques", [[[0, 1, 2]], [[0, 1, 2], [3, 4, 5]]])
def test_collapse_forbids_consecutive_steps_in_a_clique(fixture, cliques) -> None:
    prism = fixture("prism6")
    collapsed = collapse(prism, cliques)
    traces = closed_path_counts(line_graph_of(collapsed), 6)
    for length in range(1, 7):
        expected = _closed_walks_avoiding_clique_pairs(prism, cliques, length)
        assert traces[length - 1] == expected
