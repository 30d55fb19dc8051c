"""Hypergraph structure: validation, incidence graph, dual and integer matrices."""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

import networkx as nx

from .algebra.matrix import IntMatrix
from .models import BipartiteGraph, Hypergraph, PruneResult, RegularShape, ValidationReport

log = logging.getLogger(__name__)


class NotRegularError(ValueError):
    """Raised when an operation needs a (d, r)-regular hypergraph."""


class DisconnectedError(ValueError):
    """Raised when an operation needs a connected hypergraph."""


def bipartite_of(h: Hypergraph) -> BipartiteGraph:
    edges = tuple(sorted((v, j) for j, edge in enumerate(h.hyperedges) for v in edge))
    return BipartiteGraph(h.n_vertices, h.n_hyperedges, edges)


def dual_of(h: Hypergraph) -> Hypergraph:
    """Swap the roles of vertices and hyperedges; hyperedge ``i`` of the dual is vertex ``i``."""
    incident: List[List[int]] = [[] for _ in range(h.n_vertices)]
    for j, edge in enumerate(h.hyperedges):
        for v in edge:
            incident[v].append(j)
    return Hypergraph.from_edges(h.n_hyperedges, incident)


def _bipartite_nx(h: Hypergraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(("v", v) for v in range(h.n_vertices))
    graph.add_nodes_from(("e", j) for j in range(h.n_hyperedges))
    graph.add_edges_from((("v", v), ("e", j)) for v, j in bipartite_of(h).edges)
    return graph


def is_connected(h: Hypergraph) -> bool:
    return nx.is_connected(_bipartite_nx(h))


def validate(h: Hypergraph) -> ValidationReport:
    """Flag the conditions the zeta routes depend on; never raises."""
    connected = is_connected(h)
    min_degree = min(h.degrees())
    min_order = min(h.orders)
    warnings: List[str] = []
    if not connected:
        warnings.append("incidence graph is disconnected")
    if min_degree < 2:
        warnings.append(f"minimum vertex degree is {min_degree}; leaves will be pruned")
    if min_order < 2:
        warnings.append("order-1 hyperedges present; they will be pruned")
    for message in warnings:
        log.warning(message)
    return ValidationReport(
        connected=connected,
        min_vertex_degree=min_degree,
        min_order=min_order,
        graph_parity_obstruction=h.total_order % 2 == 1,
        warnings=tuple(warnings),
    )


def incidence_matrix(h: Hypergraph) -> IntMatrix:
    rows = [[0] * h.n_hyperedges for _ in range(h.n_vertices)]
    for j, edge in enumerate(h.hyperedges):
        for v in edge:
            rows[v][j] = 1
    return IntMatrix.from_rows(rows)


def vertex_degree_matrix(h: Hypergraph) -> IntMatrix:
    return IntMatrix.diagonal(h.degrees())


def adjacency_of_hypergraph(h: Hypergraph) -> IntMatrix:
    """``M M^t - D_V``: non-backtracking length-2 paths in the incidence graph."""
    m = incidence_matrix(h)
    return m @ m.transpose() - vertex_degree_matrix(h)


def bipartite_adjacency(h: Hypergraph) -> IntMatrix:
    """Block matrix ``[[0, M], [M^t, 0]]`` on hypervertices then hyperedges."""
    n1, n2 = h.n_vertices, h.n_hyperedges
    rows = [[0] * (n1 + n2) for _ in range(n1 + n2)]
    for v, j in bipartite_of(h).edges:
        rows[v][n1 + j] = 1
        rows[n1 + j][v] = 1
    return IntMatrix.from_rows(rows)


def bipartite_q_matrix(h: Hypergraph) -> IntMatrix:
    """``D - I`` for the incidence graph: vertex degrees, then hyperedge orders, minus one."""
    return IntMatrix.diagonal([d - 1 for d in h.degrees()] + [k - 1 for k in h.orders])


def regularity_of(h: Hypergraph) -> Optional[Tuple[int, int]]:
    degrees = set(h.degrees())
    orders = set(h.orders)
    if len(degrees) == 1 and len(orders) == 1:
        return degrees.pop(), orders.pop()
    return None


def regular_shape(h: Hypergraph) -> RegularShape:
    """Regularity parameters, raising for irregular input."""
    regularity = regularity_of(h)
    if regularity is None:
        raise NotRegularError(
            f"hypergraph is not regular: degrees {sorted(set(h.degrees()))}, "
            f"orders {sorted(set(h.orders))}"
        )
    d, r = regularity
    return RegularShape(d=d, r=r, n1=h.n_vertices, n2=h.n_hyperedges)


def euler_chi_bipartite(h: Hypergraph) -> int:
    return h.n_vertices + h.n_hyperedges - h.total_order


def prune_leaves(h: Hypergraph) -> PruneResult:
    """Repeatedly delete degree-1 vertices of the incidence graph.

    A hypervertex in one hyperedge leaves that hyperedge; a hyperedge of
    order at most one disappears. Survivors are re-indexed in order.
    """
    members = [set(edge) for edge in h.hyperedges]
    alive_edges = set(range(h.n_hyperedges))
    alive_vertices = set(range(h.n_vertices))
    changed = True
    while changed:
        changed = False
        for j in sorted(alive_edges):
            if len(members[j]) <= 1:
                alive_edges.discard(j)
                changed = True
        degree = {v: 0 for v in alive_vertices}
        home = {}
        for j in alive_edges:
            for v in members[j]:
                degree[v] += 1
                home[v] = j
        for v, count in degree.items():
            if count <= 1:
                alive_vertices.discard(v)
                if count == 1:
                    members[home[v]].discard(v)
                changed = True
    removed_vertices = h.n_vertices - len(alive_vertices)
    removed_edges = h.n_hyperedges - len(alive_edges)
    if not alive_vertices:
        return PruneResult(None, removed_vertices, removed_edges)
    vertex_map = tuple(sorted(alive_vertices))
    new_index = {v: i for i, v in enumerate(vertex_map)}
    edges = [[new_index[v] for v in members[j]] for j in sorted(alive_edges)]
    if removed_vertices or removed_edges:
        log.info("pruned %d vertices and %d hyperedges", removed_vertices, removed_edges)
    return PruneResult(
        Hypergraph.from_edges(len(vertex_map), edges), removed_vertices, removed_edges, vertex_map
    )


__all__ = [
    "DisconnectedError",
    "NotRegularError",
    "adjacency_of_hypergraph",
    "bipartite_adjacency",
    "bipartite_of",
    "bipartite_q_matrix",
    "dual_of",
    "euler_chi_bipartite",
    "incidence_matrix",
    "is_connected",
    "prune_leaves",
    "regular_shape",
    "regularity_of",
    "validate",
    "vertex_degree_matrix",
]
