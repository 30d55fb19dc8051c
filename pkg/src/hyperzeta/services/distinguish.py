"""Clique-collapse zeta invariants for telling cospectral graphs apart.

Collapsing a k-clique into one hyperedge forbids every cycle that takes
two consecutive steps inside the clique, so the zeta function of the
collapsed hypergraph sees local structure the Ihara zeta misses.
"""

from __future__ import annotations

import logging
from concurrent.futures import Executor
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from hyperzeta.algebra.matrix import IntMatrix
from hyperzeta.algebra.poly import IntPoly, char_poly, det_pencil
from hyperzeta.hypergraph import adjacency_of_hypergraph
from hyperzeta.models import (
    CollapseFamily,
    CollapseMode,
    DistinguishReport,
    DistinguishVerdict,
    Hypergraph,
    InvariantMultiset,
    canonical_poly_order,
)
from hyperzeta.routes.base import prepare_core

from .zeta import zeta_via_bass

log = logging.getLogger(__name__)

Clique = Tuple[int, ...]


class GraphError(ValueError):
    """Raised when a hypergraph is not a simple graph."""


class CliqueError(ValueError):
    """Raised for invalid clique sizes or vertex sets that are not cliques."""


def check_graph(g: Hypergraph) -> None:
    if not g.is_graph:
        raise GraphError(f"every edge must have order 2, got orders {sorted(set(g.orders))}")
    seen: Set[Clique] = set()
    for edge in g.hyperedges:
        if edge in seen:
            raise GraphError(f"duplicate edge {edge}")
        seen.add(edge)


def _nx_graph(g: Hypergraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n_vertices))
    graph.add_edges_from(g.hyperedges)
    return graph


def enumerate_cliques(g: Hypergraph, k: int) -> List[Clique]:
    """All k-cliques, each sorted, in lexicographic order."""
    check_graph(g)
    if k < 3:
        raise CliqueError(f"clique size must be at least 3, got {k}")
    found = []
    for clique in nx.enumerate_all_cliques(_nx_graph(g)):
        if len(clique) > k:
            break
        if len(clique) == k:
            found.append(tuple(sorted(clique)))
    return sorted(found)


def collapse_family(g: Hypergraph, cliques: Iterable[Iterable[int]]) -> CollapseFamily:
    check_graph(g)
    edges = set(g.hyperedges)
    chosen: List[Clique] = sorted({tuple(sorted(c)) for c in cliques})
    covered: Set[Clique] = set()
    for clique in chosen:
        if len(clique) < 2 or len(set(clique)) != len(clique):
            raise CliqueError(f"{clique} is not a clique")
        pairs = set(combinations(clique, 2))
        missing = pairs - edges
        if missing:
            raise CliqueError(f"{clique} is not a clique: missing edges {sorted(missing)}")
        covered |= pairs
    kept = [edge for edge in g.hyperedges if edge not in covered]
    result = Hypergraph.from_edges(g.n_vertices, kept + chosen)
    return CollapseFamily(base=g, cliques=tuple(chosen), result=result)


def collapse(g: Hypergraph, cliques: Iterable[Iterable[int]]) -> Hypergraph:
    """Replace each chosen clique by one hyperedge; an edge in several cliques goes once."""
    return collapse_family(g, cliques).result


def _maximum_disjoint_sets(cliques: Sequence[Clique]) -> List[Tuple[Clique, ...]]:
    best: List[Tuple[Clique, ...]] = []
    best_size = 0

    def extend(start: int, chosen: List[Clique], used: FrozenSet[int]) -> None:
        nonlocal best, best_size
        if len(chosen) > best_size:
            best, best_size = [], len(chosen)
        if len(chosen) == best_size:
            best.append(tuple(chosen))
        for i in range(start, len(cliques)):
            if used.isdisjoint(cliques[i]):
                chosen.append(cliques[i])
                extend(i + 1, chosen, used | frozenset(cliques[i]))
                chosen.pop()

    extend(0, [], frozenset())
    return best


def collapse_choices(
    g: Hypergraph,
    k: int,
    mode: CollapseMode,
    explicit: Optional[Sequence[Sequence[Sequence[int]]]] = None,
) -> List[Tuple[Clique, ...]]:
    """The clique sets a mode asks to collapse; a graph without k-cliques yields one empty choice."""
    if mode is CollapseMode.EXPLICIT:
        if explicit is None:
            raise CliqueError("explicit mode needs a list of clique sets")
        return [tuple(tuple(sorted(c)) for c in choice) for choice in explicit]
    cliques = enumerate_cliques(g, k)
    if not cliques:
        return [()]
    if mode is CollapseMode.ALL_SINGLETONS:
        return [(c,) for c in cliques]
    if mode is CollapseMode.DISJOINT_PAIRS:
        return _maximum_disjoint_sets(cliques)
    return [tuple(cliques)]


def invariant_multiset(
    g: Hypergraph,
    k: int,
    mode: CollapseMode,
    explicit: Optional[Sequence[Sequence[Sequence[int]]]] = None,
    executor: Optional[Executor] = None,
) -> InvariantMultiset:
    """Zeta reciprocals of every collapse the mode generates, canonically sorted."""
    choices = collapse_choices(g, k, mode, explicit)
    hypergraphs = [collapse(g, choice) for choice in choices]
    if executor is None:
        results = [zeta_via_bass(h) for h in hypergraphs]
    else:
        results = list(executor.map(zeta_via_bass, hypergraphs))
    warnings: List[str] = []
    for index, result in enumerate(results):
        warnings.extend(f"choice {index}: {message}" for message in result.warnings)
    log.info("%s: %d collapse choices for k=%d", mode.value, len(choices), k)
    return InvariantMultiset(
        polynomials=canonical_poly_order(r.reciprocal for r in results),
        choices=len(choices),
        warnings=tuple(warnings),
    )


def ihara_zeta_graph(g: Hypergraph) -> IntPoly:
    """Ihara's ``1/Z(u) = (1-u^2)^(-chi) det(I - uA + u^2(D - I))`` on the graph itself."""
    check_graph(g)
    core, _ = prepare_core(g)
    if core is None:
        return IntPoly.one()
    a = adjacency_of_hypergraph(core)
    q = IntMatrix.diagonal([d - 1 for d in core.degrees()])
    minus_chi = core.n_hyperedges - core.n_vertices
    det = det_pencil(IntMatrix.identity(core.n_vertices), -a, q)
    return IntPoly.of((1, 0, -1)) ** minus_chi * det


def adjacency_char_poly(g: Hypergraph) -> IntPoly:
    return char_poly(adjacency_of_hypergraph(g))


def distinguish(
    g1: Hypergraph,
    g2: Hypergraph,
    k: int,
    mode: CollapseMode,
    executor: Optional[Executor] = None,
) -> DistinguishReport:
    """Compare two graphs by spectrum, Ihara zeta and the collapse invariant.

    A ``DISTINGUISHED`` verdict proves the graphs non-isomorphic; the
    opposite verdict proves nothing.
    """
    first = invariant_multiset(g1, k, mode, executor=executor)
    second = invariant_multiset(g2, k, mode, executor=executor)
    return compare_invariants(
        adjacency_char_poly(g1) == adjacency_char_poly(g2),
        ihara_zeta_graph(g1) == ihara_zeta_graph(g2),
        first,
        second,
    )


def compare_invariants(
    cospectral: bool, same_ihara: bool, first: InvariantMultiset, second: InvariantMultiset
) -> DistinguishReport:
    equal = first.polynomials == second.polynomials
    verdict = DistinguishVerdict.NOT_DISTINGUISHED if equal else DistinguishVerdict.DISTINGUISHED
    return DistinguishReport(
        cospectral=cospectral,
        same_ihara=same_ihara,
        invariant_multisets_equal=equal,
        verdict=verdict,
        first=first,
        second=second,
    )


__all__ = [
    "CliqueError",
    "GraphError",
    "adjacency_char_poly",
    "check_graph",
    "collapse",
    "collapse_choices",
    "collapse_family",
    "compare_invariants",
    "distinguish",
    "enumerate_cliques",
    "ihara_zeta_graph",
    "invariant_multiset",
]
