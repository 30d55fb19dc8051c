"""Coloured clique expansion, oriented line graph and cycle oracles.

Every hyperedge becomes a clique whose arcs carry the hyperedge's index as
colour. Line-graph vertices are those arcs; an arc may follow another only
when it starts where the first ends and has a different colour, so walks
never use one hyperedge twice in a row.
"""

from __future__ import annotations

import logging
import random
from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .algebra.matrix import IntMatrix
from .models import Hypergraph

log = logging.getLogger(__name__)

DEFAULT_MAX_WALKS = 2_000_000


class EnumerationTooLargeError(RuntimeError):
    """Raised when prime-cycle enumeration exceeds its walk budget."""


@dataclass(frozen=True, slots=True)
class Arc:
    origin: int
    terminus: int
    color: int


@dataclass(frozen=True, slots=True)
class ColoredOrientedGraph:
    n_vertices: int
    arcs: Tuple[Arc, ...]
    involution: Tuple[int, ...]

    def inverse(self, index: int) -> Arc:
        return self.arcs[self.involution[index]]


@dataclass(frozen=True, slots=True)
class OrientedLineGraph:
    n_vertices: int
    arcs: Tuple[Tuple[int, int], ...]

    def successors(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.n_vertices)]
        for i, j in self.arcs:
            out[i].append(j)
        return out

    def predecessors(self) -> List[List[int]]:
        into: List[List[int]] = [[] for _ in range(self.n_vertices)]
        for i, j in self.arcs:
            into[j].append(i)
        return into

    def out_degrees(self) -> List[int]:
        return [len(s) for s in self.successors()]


def clique_expand(h: Hypergraph, orientation: Optional[int] = None) -> ColoredOrientedGraph:
    """Both arcs of every vertex pair inside every hyperedge.

    ``orientation=None`` lists arcs by (colour, smaller endpoint, larger
    endpoint) with the increasing direction first. An integer seed shuffles
    the pair order and which direction of each pair comes first.
    """
    pairs: List[Tuple[int, int, int]] = [
        (v, w, color)
        for color, edge in enumerate(h.hyperedges)
        for v, w in combinations(edge, 2)
    ]
    rng = random.Random(orientation) if orientation is not None else None
    if rng is not None:
        rng.shuffle(pairs)
    arcs: List[Arc] = []
    involution: List[int] = []
    for v, w, color in pairs:
        if rng is not None and rng.random() < 0.5:
            v, w = w, v
        base = len(arcs)
        arcs.extend((Arc(v, w, color), Arc(w, v, color)))
        involution.extend((base + 1, base))
    return ColoredOrientedGraph(h.n_vertices, tuple(arcs), tuple(involution))


def oriented_line_graph(g: ColoredOrientedGraph) -> OrientedLineGraph:
    leaving: Dict[int, List[int]] = defaultdict(list)
    for index, arc in enumerate(g.arcs):
        leaving[arc.origin].append(index)
    successions = tuple(
        (i, j)
        for i, arc in enumerate(g.arcs)
        for j in leaving[arc.terminus]
        if g.arcs[j].color != arc.color
    )
    return OrientedLineGraph(len(g.arcs), successions)


def line_graph_of(h: Hypergraph, orientation: Optional[int] = None) -> OrientedLineGraph:
    return oriented_line_graph(clique_expand(h, orientation))


def line_graph_arc_count(l: OrientedLineGraph) -> int:
    return len(l.arcs)


def perron_frobenius_matrix(l: OrientedLineGraph) -> IntMatrix:
    n = l.n_vertices
    flat = [0] * (n * n)
    for i, j in l.arcs:
        flat[i * n + j] = 1
    return IntMatrix(n, n, tuple(flat))


def is_strongly_connected(l: OrientedLineGraph) -> bool:
    if l.n_vertices == 0:
        return False
    graph = nx.DiGraph()
    graph.add_nodes_from(range(l.n_vertices))
    graph.add_edges_from(l.arcs)
    return nx.is_strongly_connected(graph)


def closed_path_counts(l: OrientedLineGraph, max_len: int) -> List[int]:
    """``[trace(T), trace(T^2), ..., trace(T^max_len)]`` by walking from each vertex."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    succ = l.successors()
    counts = [0] * max_len
    for start in range(l.n_vertices):
        frontier: Dict[int, int] = {start: 1}
        for k in range(max_len):
            step: Dict[int, int] = defaultdict(int)
            for vertex, ways in frontier.items():
                for nxt in succ[vertex]:
                    step[nxt] += ways
            frontier = step
            counts[k] += frontier.get(start, 0)
    return counts


def _distances_to(target: int, predecessors: Sequence[Sequence[int]], floor: int) -> Dict[int, int]:
    """Shortest distance from each vertex ``>= floor`` to ``target`` within that vertex set."""
    dist = {target: 0}
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for u in predecessors[v]:
            if u >= floor and u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _is_primitive(cycle: Tuple[int, ...]) -> bool:
    m = len(cycle)
    return all(
        cycle != cycle[d:] + cycle[:d] for d in range(1, m) if m % d == 0
    )


def _min_rotation(cycle: Tuple[int, ...]) -> Tuple[int, ...]:
    return min(cycle[i:] + cycle[:i] for i in range(len(cycle)))


def enumerate_prime_cycles(
    l: OrientedLineGraph, max_len: int, max_walks: int = DEFAULT_MAX_WALKS
) -> Dict[int, int]:
    """Count rotation classes of primitive closed walks up to ``max_len``.

    Each class is found from its smallest vertex: walks from ``s`` only
    visit vertices ``>= s`` and are cut when they cannot get back to ``s``
    in time.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    succ = l.successors()
    pred = l.predecessors()
    seen: Dict[int, Set[Tuple[int, ...]]] = defaultdict(set)
    steps = 0

    for start in range(l.n_vertices):
        dist = _distances_to(start, pred, start)
        if len(dist) == 1:
            continue
        path = [start]

        def walk(vertex: int) -> None:
            nonlocal steps
            depth = len(path)
            for nxt in succ[vertex]:
                if nxt < start:
                    continue
                steps += 1
                if steps > max_walks:
                    raise EnumerationTooLargeError(
                        f"prime-cycle enumeration exceeded {max_walks} steps at length {max_len}"
                    )
                if nxt == start:
                    cycle = tuple(path)
                    if _is_primitive(cycle):
                        seen[depth].add(_min_rotation(cycle))
                    if depth + 2 <= max_len:
                        path.append(nxt)
                        walk(nxt)
                        path.pop()
                elif nxt in dist and depth + dist[nxt] <= max_len:
                    path.append(nxt)
                    walk(nxt)
                    path.pop()

        walk(start)

    counts = {length: len(classes) for length, classes in sorted(seen.items())}
    log.debug("prime cycles up to length %d: %s (%d steps)", max_len, counts, steps)
    return counts


__all__ = [
    "Arc",
    "ColoredOrientedGraph",
    "EnumerationTooLargeError",
    "OrientedLineGraph",
    "clique_expand",
    "closed_path_counts",
    "enumerate_prime_cycles",
    "is_strongly_connected",
    "line_graph_arc_count",
    "line_graph_of",
    "oriented_line_graph",
    "perron_frobenius_matrix",
]
