"""Named hypergraph fixtures shipped inside the package."""

from __future__ import annotations

import logging
from importlib import resources
from typing import List

import networkx as nx

from hyperzeta.models import Hypergraph

from .hgfile import parse_hypergraph

log = logging.getLogger(__name__)

# name -> (vertices, edges, degree, triangles) of hand-transcribed graphs
_TRANSCRIBED = {
    "stark_terras_x1": (28, 42, 3, 4),
    "stark_terras_x2": (28, 42, 3, 4),
}


class FixtureError(ValueError):
    """Raised when a packaged fixture does not have its documented shape."""


def check_transcription(name: str, h: Hypergraph) -> None:
    """Cheap structural check of a transcribed graph: counts, regularity and triangles."""
    n_vertices, n_edges, degree, triangles = _TRANSCRIBED[name]
    if (h.n_vertices, h.n_hyperedges) != (n_vertices, n_edges):
        raise FixtureError(
            f"{name}: expected {n_vertices} vertices and {n_edges} edges, "
            f"got {h.n_vertices} and {h.n_hyperedges}"
        )
    if not h.is_graph or len(set(h.hyperedges)) != n_edges:
        raise FixtureError(f"{name}: expected a simple graph")
    if set(h.degrees()) != {degree}:
        raise FixtureError(f"{name}: expected every vertex to have degree {degree}")
    graph = nx.Graph(h.hyperedges)
    if not nx.is_connected(graph):
        raise FixtureError(f"{name}: expected a connected graph")
    found = sum(nx.triangles(graph).values()) // 3
    if found != triangles:
        raise FixtureError(f"{name}: expected {triangles} triangles, found {found}")


def available_fixtures() -> List[str]:
    data = resources.files("hyperzeta") / "data"
    return sorted(entry.name[:-3] for entry in data.iterdir() if entry.name.endswith(".hg"))


def load_fixture(name: str) -> Hypergraph:
    resource = resources.files("hyperzeta") / "data" / f"{name}.hg"
    if not resource.is_file():
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(available_fixtures())}")
    h = parse_hypergraph(resource.read_bytes())
    if name in _TRANSCRIBED:
        check_transcription(name, h)
        log.debug("%s passed the transcription check", name)
    return h


__all__ = ["FixtureError", "available_fixtures", "check_transcription", "load_fixture"]
