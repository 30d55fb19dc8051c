"""Shared fixtures: packaged hypergraphs and seeded random generators."""

from __future__ import annotations

import random
from typing import Callable, List

import pytest

from hyperzeta.hypergraph import validate
from hyperzeta.models import Hypergraph
from hyperzeta.storage.fixtures import load_fixture


def random_hypergraph(
    rng: random.Random, max_vertices: int = 8, max_order: int = 4, max_edges: int = 6
) -> Hypergraph:
    """Connected hypergraph with minimum degree and order at least 2."""
    while True:
        n = rng.randint(3, max_vertices)
        m = rng.randint(2, max_edges)
        edges: List[List[int]] = [
            rng.sample(range(n), rng.randint(2, min(max_order, n))) for _ in range(m)
        ]
        covered = {v for edge in edges for v in edge}
        if len(covered) != n:
            continue
        h = Hypergraph.from_edges(n, edges)
        report = validate(h)
        if report.connected and report.min_degree_ok and report.orders_ok:
            return h


def random_regular_hypergraph(rng: random.Random) -> Hypergraph:
    """A (d, r)-regular hypergraph from a random perfect matching of vertex slots to edge slots."""
    while True:
        d, r = rng.choice([(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2)])
        n2 = rng.randint(2, 4) * d
        n1 = n2 * r // d
        slots = [v for v in range(n1) for _ in range(d)]
        rng.shuffle(slots)
        edges = [slots[j * r : (j + 1) * r] for j in range(n2)]
        if any(len(set(edge)) != r for edge in edges):
            continue
        h = Hypergraph.from_edges(n1, edges)
        if validate(h).connected:
            return h


def random_bipartite_graph(rng: random.Random, max_side: int = 5) -> Hypergraph:
    """Connected bipartite graph as an order-2 hypergraph; left vertices come first."""
    while True:
        left, right = rng.randint(2, max_side), rng.randint(2, max_side)
        edges = [[a, left + b] for a in range(left) for b in range(right) if rng.random() < 0.6]
        covered = {v for edge in edges for v in edge}
        if len(covered) != left + right:
            continue
        h = Hypergraph.from_edges(left + right, edges)
        if validate(h).connected:
            return h


@pytest.fixture
def fixture() -> Callable[[str], Hypergraph]:
    return load_fixture


@pytest.fixture
def k4_collapsed() -> Hypergraph:
    return load_fixture("k4_collapsed")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def random_instances(rng: random.Random) -> Callable[..., List[Hypergraph]]:
    def build(count: int, **limits: int) -> List[Hypergraph]:
        return [random_hypergraph(rng, **limits) for _ in range(count)]

    return build


@pytest.fixture
def regular_instances(rng: random.Random) -> Callable[[int], List[Hypergraph]]:
    def build(count: int) -> List[Hypergraph]:
        return [random_regular_hypergraph(rng) for _ in range(count)]

    return build


@pytest.fixture
def bipartite_instances(rng: random.Random) -> Callable[[int], List[Hypergraph]]:
    def build(count: int) -> List[Hypergraph]:
        return [random_bipartite_graph(rng) for _ in range(count)]

    return build
