"""Core domain models shared by the zeta routes and services."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra.poly import IntPoly
from .algebra.roots import Band, RootCensus, RootInterval


class InvalidHypergraphError(ValueError):
    """Raised when hyperedges violate the structural invariants of a hypergraph."""


@dataclass(frozen=True, slots=True)
class Hypergraph:
    """Vertices ``0 .. n_vertices - 1`` and an ordered sequence of hyperedges.

    Each hyperedge is stored as a sorted tuple. Duplicate hyperedges are
    distinct hyperedges; every vertex must lie in at least one of them.
    """

    n_vertices: int
    hyperedges: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n_vertices < 1:
            raise InvalidHypergraphError("a hypergraph needs at least one vertex")
        covered = set()
        normalized = []
        for index, edge in enumerate(self.hyperedges):
            members = tuple(sorted(int(v) for v in edge))
            if not members:
                raise InvalidHypergraphError(f"hyperedge {index} is empty")
            if len(set(members)) != len(members):
                raise InvalidHypergraphError(f"hyperedge {index} repeats a vertex: {members}")
            if members[0] < 0 or members[-1] >= self.n_vertices:
                raise InvalidHypergraphError(
                    f"hyperedge {index} has a vertex outside 0..{self.n_vertices - 1}: {members}"
                )
            covered.update(members)
            normalized.append(members)
        if len(covered) != self.n_vertices:
            missing = sorted(set(range(self.n_vertices)) - covered)
            raise InvalidHypergraphError(f"vertices in no hyperedge: {missing}")
        object.__setattr__(self, "hyperedges", tuple(normalized))

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n_vertices, tuple(tuple(edge) for edge in edges))

    @property
    def n_hyperedges(self) -> int:
        return len(self.hyperedges)

    @property
    def orders(self) -> List[int]:
        return [len(edge) for edge in self.hyperedges]

    @property
    def total_order(self) -> int:
        return sum(len(edge) for edge in self.hyperedges)

    def degrees(self) -> List[int]:
        counts = [0] * self.n_vertices
        for edge in self.hyperedges:
            for v in edge:
                counts[v] += 1
        return counts

    @property
    def is_graph(self) -> bool:
        """All hyperedges have order 2."""
        return all(len(edge) == 2 for edge in self.hyperedges)


@dataclass(frozen=True, slots=True)
class BipartiteGraph:
    """Incidence graph: left vertices are hypervertices, right vertices hyperedges."""

    left_count: int
    right_count: int
    edges: Tuple[Tuple[int, int], ...]

    @property
    def n_vertices(self) -> int:
        return self.left_count + self.right_count

    def swapped(self) -> "BipartiteGraph":
        return BipartiteGraph(
            self.right_count, self.left_count, tuple(sorted((e, v) for v, e in self.edges))
        )


@dataclass(frozen=True, slots=True)
class PruneResult:
    """Outcome of iteratively removing degree-1 vertices of the bipartite graph."""

    hypergraph: Optional[Hypergraph]
    removed_vertices: int
    removed_hyperedges: int
    vertex_map: Tuple[int, ...] = ()

    @property
    def changed(self) -> bool:
        return bool(self.removed_vertices or self.removed_hyperedges)


@dataclass(frozen=True, slots=True)
class ValidationReport:
    connected: bool
    min_vertex_degree: int
    min_order: int
    graph_parity_obstruction: bool
    line_graph_strongly_connected: Optional[bool] = None
    warnings: Tuple[str, ...] = ()

    @property
    def min_degree_ok(self) -> bool:
        return self.min_vertex_degree >= 2

    @property
    def orders_ok(self) -> bool:
        return self.min_order >= 2

    @property
    def zeta_ready(self) -> bool:
        return self.connected and self.min_degree_ok


class Route(str, Enum):
    LINE_GRAPH = "linegraph"
    BASS = "bass"
    HASHIMOTO_1 = "hashimoto1"
    HASHIMOTO_2 = "hashimoto2"


@dataclass(frozen=True, slots=True)
class ZetaResult:
    """``reciprocal`` is the polynomial ``1 / zeta(u)``."""

    reciprocal: IntPoly
    route: Route
    warnings: Tuple[str, ...] = ()
    bipartite_reciprocal: Optional[IntPoly] = None

    def __post_init__(self) -> None:
        if self.reciprocal.coefficient(0) != 1:
            raise ValueError(f"zeta reciprocal must have constant term 1: {self.reciprocal}")


@dataclass(frozen=True, slots=True)
class CrossValidationReport:
    results: Tuple[ZetaResult, ...]
    degree: int
    expected_degree: int
    dual_identity: bool
    orientation_seeds: int
    graph_parity_obstruction: bool
    warnings: Tuple[str, ...] = ()

    @property
    def reciprocal(self) -> IntPoly:
        return self.results[0].reciprocal


class FunctionalEquationForm(str, Enum):
    """The four explicit completed zeta functions; all satisfy ``F(u) = F(1/(qu))``."""

    LAMBDA_1 = "lambda1"
    LAMBDA_2 = "lambda2"
    XI_1 = "xi1"
    XI_2 = "xi2"


@dataclass(frozen=True, slots=True)
class EvennessReport:
    even: bool
    unimodular_implied: bool


@dataclass(frozen=True, slots=True)
class RegularShape:
    """Parameters of a (d, r)-regular hypergraph with ``n1`` vertices and ``n2`` hyperedges."""

    d: int
    r: int
    n1: int
    n2: int

    @property
    def q(self) -> int:
        return (self.d - 1) * (self.r - 1)

    @property
    def minus_chi(self) -> int:
        return self.n1 * (self.d - 1) - self.n2


class Side(str, Enum):
    HYPERGRAPH = "hypergraph"
    DUAL = "dual"


@dataclass(frozen=True, slots=True)
class ObviousEigenvalue:
    value: int
    multiplicity: int
    side: Side


@dataclass(frozen=True, slots=True)
class CharRelations:
    p: IntPoly
    p_dual: IntPoly
    q_squared: IntPoly
    eq2: bool
    eq3: bool
    eq4: bool


@dataclass(frozen=True, slots=True)
class AlonBoppanaBound:
    """The exact number ``integer_part + sqrt(radicand)``."""

    integer_part: int
    radicand: int

    @property
    def band(self) -> Band:
        return Band(self.integer_part, self.radicand)

    @property
    def exact_value(self) -> Optional[int]:
        root = isqrt(self.radicand)
        return self.integer_part + root if root * root == self.radicand else None

    def exceeds(self, value: Fraction) -> bool:
        """True iff ``value`` is strictly greater than the bound."""
        t = Fraction(value) - self.integer_part
        return t > 0 and t * t > self.radicand

    def within(self, value: Fraction) -> bool:
        return not self.exceeds(value)

    def __str__(self) -> str:
        exact = self.exact_value
        if exact is not None:
            return str(exact)
        return f"{self.integer_part} + sqrt({self.radicand})"


class RamanujanVerdict(str, Enum):
    YES = "yes"
    NO = "no"
    BOUNDARY_WITHIN_TOLERANCE = "boundary-within-tolerance"


@dataclass(frozen=True, slots=True)
class SpectralReport:
    char_poly: IntPoly
    d: int
    r: int
    q: int
    obvious: Optional[ObviousEigenvalue]
    lambda1: RootInterval
    root_intervals: Tuple[RootInterval, ...]
    lambda2_bound_check: RootCensus
    ramanujan: RamanujanVerdict
    alon_boppana: AlonBoppanaBound
    warnings: Tuple[str, ...] = ()


class PoleClass(str, Enum):
    TRIVIAL = "trivial"
    ON_CIRCLE = "on-circle"
    OFF_CIRCLE = "off-circle"


@dataclass(frozen=True, slots=True)
class DetPartRoot:
    """An adjacency eigenvalue and where its quadratic factor puts its two zeros."""

    eigenvalue: RootInterval
    classification: PoleClass


@dataclass(frozen=True, slots=True)
class PoleReport:
    shape: RegularShape
    dualized: bool
    prefactor_mult_at_1: int
    mult_at_1: int
    prefactor_mult_at_neg_inv_r_minus_1: int
    mult_at_neg_inv_r_minus_1: int
    det_part_roots: Tuple[DetPartRoot, ...]

    @property
    def on_critical_circle(self) -> bool:
        return all(
            root.classification is not PoleClass.OFF_CIRCLE
            for root in self.det_part_roots
            if root.classification is not PoleClass.TRIVIAL
        )


class CollapseMode(str, Enum):
    ALL_SINGLETONS = "all-singletons"
    DISJOINT_PAIRS = "disjoint-pairs"
    ALL_CLIQUES_AT_ONCE = "all-at-once"
    EXPLICIT = "explicit"


@dataclass(frozen=True, slots=True)
class CollapseFamily:
    base: Hypergraph
    cliques: Tuple[Tuple[int, ...], ...]
    result: Hypergraph


@dataclass(frozen=True, slots=True)
class InvariantMultiset:
    polynomials: Tuple[IntPoly, ...]
    choices: int
    warnings: Tuple[str, ...] = ()


class DistinguishVerdict(str, Enum):
    DISTINGUISHED = "distinguished"
    NOT_DISTINGUISHED = "not-distinguished-by-this-invariant"


@dataclass(frozen=True, slots=True)
class DistinguishReport:
    cospectral: bool
    same_ihara: bool
    invariant_multisets_equal: bool
    verdict: DistinguishVerdict
    first: InvariantMultiset
    second: InvariantMultiset


@dataclass(slots=True)
class OracleRow:
    """One order of the series comparison table."""

    order: int
    series: Fraction
    euler_product: Fraction
    trace_exponential: Fraction

    @property
    def agree(self) -> bool:
        return self.series == self.euler_product == self.trace_exponential


@dataclass(slots=True)
class OracleTable:
    rows: List[OracleRow] = field(default_factory=list)
    prime_cycles: Dict[int, int] = field(default_factory=dict)
    closed_paths: Sequence[int] = ()

    @property
    def agree(self) -> bool:
        return all(row.agree for row in self.rows)


def canonical_poly_order(polys: Iterable[IntPoly]) -> Tuple[IntPoly, ...]:
    return tuple(sorted(polys, key=lambda p: (p.degree, p.coefficients)))


__all__ = [
    "AlonBoppanaBound",
    "BipartiteGraph",
    "CharRelations",
    "CollapseFamily",
    "CollapseMode",
    "CrossValidationReport",
    "DetPartRoot",
    "DistinguishReport",
    "DistinguishVerdict",
    "EvennessReport",
    "FunctionalEquationForm",
    "Hypergraph",
    "InvalidHypergraphError",
    "InvariantMultiset",
    "ObviousEigenvalue",
    "OracleRow",
    "OracleTable",
    "PoleClass",
    "PoleReport",
    "PruneResult",
    "RamanujanVerdict",
    "RegularShape",
    "Route",
    "Side",
    "SpectralReport",
    "ValidationReport",
    "ZetaResult",
    "canonical_poly_order",
]
