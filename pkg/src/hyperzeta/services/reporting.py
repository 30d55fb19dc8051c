"""Plain ``key: value`` report rendering shared by the CLI subcommands."""

from __future__ import annotations

from typing import Iterable, List, Optional

from hyperzeta.algebra.poly import IntPoly
from hyperzeta.models import (
    CharRelations,
    CrossValidationReport,
    DistinguishReport,
    EvennessReport,
    OracleTable,
    PoleReport,
    SpectralReport,
    ValidationReport,
    ZetaResult,
)


def _flag(value: Optional[bool]) -> str:
    if value is None:
        return "n/a"
    return "true" if value else "false"


def _pass(value: bool) -> str:
    return "PASS" if value else "FAIL"


def _warnings(messages: Iterable[str]) -> List[str]:
    return [f"warning: {message}" for message in messages]


def render_polynomial(key: str, p: IntPoly) -> str:
    return f"{key}: {p.to_text()}"


def render_zeta_result(result: ZetaResult) -> List[str]:
    lines = [render_polynomial(f"route.{result.route.value}", result.reciprocal)]
    if result.bipartite_reciprocal is not None:
        lines.append(render_polynomial(f"route.{result.route.value}.bipartite", result.bipartite_reciprocal))
    lines.extend(_warnings(result.warnings))
    return lines


def render_cross_validation(report: CrossValidationReport, evenness: Optional[EvennessReport] = None) -> List[str]:
    lines: List[str] = []
    for result in report.results:
        lines.append(render_polynomial(f"route.{result.route.value}", result.reciprocal))
        if result.bipartite_reciprocal is not None:
            lines.append(render_polynomial(f"route.{result.route.value}.bipartite", result.bipartite_reciprocal))
    lines.append("cross_validation: AGREE")
    lines.append(f"degree: {report.degree}")
    lines.append(f"expected_degree: {report.expected_degree}")
    lines.append(f"dual_identity: {_pass(report.dual_identity)}")
    lines.append(f"orientation_seeds: {report.orientation_seeds} PASS")
    lines.append(f"graph_parity_obstruction: {_flag(report.graph_parity_obstruction)}")
    if evenness is not None:
        lines.append(f"even: {_flag(evenness.even)}")
        lines.append(f"unimodular_implied: {_flag(evenness.unimodular_implied)}")
    lines.extend(_warnings(report.warnings))
    return lines


def render_validation(report: ValidationReport) -> List[str]:
    lines = [
        f"connected: {_flag(report.connected)}",
        f"min_vertex_degree: {report.min_vertex_degree}",
        f"min_degree_ok: {_flag(report.min_degree_ok)}",
        f"orders_ok: {_flag(report.orders_ok)}",
        f"line_graph_strongly_connected: {_flag(report.line_graph_strongly_connected)}",
        f"graph_parity_obstruction: {_flag(report.graph_parity_obstruction)}",
        f"zeta_ready: {_flag(report.zeta_ready)}",
    ]
    lines.extend(_warnings(report.warnings))
    return lines


def render_oracle(table: OracleTable) -> List[str]:
    lines = ["order series euler_product trace_exponential agree"]
    for row in table.rows:
        lines.append(
            f"{row.order} {row.series} {row.euler_product} {row.trace_exponential} {_flag(row.agree)}"
        )
    primes = " ".join(f"{length}:{count}" for length, count in sorted(table.prime_cycles.items()))
    lines.append(f"prime_cycles: {primes}")
    lines.append("closed_paths: " + " ".join(str(n) for n in table.closed_paths))
    lines.append(f"oracle: {'AGREE' if table.agree else 'MISMATCH'}")
    return lines


def render_char_relations(relations: CharRelations) -> List[str]:
    return [
        render_polynomial("char_poly", relations.p),
        render_polynomial("char_poly_dual", relations.p_dual),
        render_polynomial("char_poly_bipartite_squared", relations.q_squared),
        f"eq2_squared_adjacency: {_pass(relations.eq2)}",
        f"eq3_bipartite_factorization: {_pass(relations.eq3)}",
        f"eq4_dual_relation: {_pass(relations.eq4)}",
    ]


def render_spectral(report: SpectralReport) -> List[str]:
    census = report.lambda2_bound_check
    lines = [
        render_polynomial("char_poly", report.char_poly),
        f"regularity: ({report.d}, {report.r})",
        f"q: {report.q}",
        f"lambda1: {report.lambda1}",
        "eigenvalues: " + ", ".join(str(i) for i in report.root_intervals),
        f"alon_boppana_bound: {report.alon_boppana}",
        f"band: {report.alon_boppana.band}",
        f"band.inside: {census.inside}",
        f"band.boundary: {census.boundary}",
        f"band.outside: {census.outside}",
        f"band.near_boundary: {census.near_boundary}",
        f"ramanujan: {report.ramanujan.value}",
    ]
    if report.obvious is not None:
        obvious = report.obvious
        lines.append(f"obvious_eigenvalue: {obvious.value} x{obvious.multiplicity} ({obvious.side.value})")
    lines.extend(_warnings(report.warnings))
    return lines


def render_poles(report: PoleReport) -> List[str]:
    lines = [
        f"poles.dualized: {_flag(report.dualized)}",
        f"poles.prefactor_mult_at_1: {report.prefactor_mult_at_1}",
        f"poles.mult_at_1: {report.mult_at_1}",
        f"poles.prefactor_mult_at_neg_inv_r_minus_1: {report.prefactor_mult_at_neg_inv_r_minus_1}",
        f"poles.mult_at_neg_inv_r_minus_1: {report.mult_at_neg_inv_r_minus_1}",
    ]
    lines.extend(
        f"poles.det_part: {root.eigenvalue} {root.classification.value}" for root in report.det_part_roots
    )
    lines.append(f"poles.on_critical_circle: {_flag(report.on_critical_circle)}")
    return lines


def render_distinguish(report: DistinguishReport) -> List[str]:
    lines = [
        f"cospectral: {_flag(report.cospectral)}",
        f"same_ihara: {_flag(report.same_ihara)}",
        f"first.choices: {report.first.choices}",
        f"second.choices: {report.second.choices}",
    ]
    lines.extend(render_polynomial("first.invariant", p) for p in report.first.polynomials)
    lines.extend(render_polynomial("second.invariant", p) for p in report.second.polynomials)
    lines.append(f"invariant_multisets_equal: {_flag(report.invariant_multisets_equal)}")
    lines.append(f"verdict: {report.verdict.value}")
    lines.extend(_warnings(report.first.warnings))
    lines.extend(_warnings(report.second.warnings))
    return lines


__all__ = [
    "render_char_relations",
    "render_cross_validation",
    "render_distinguish",
    "render_oracle",
    "render_poles",
    "render_polynomial",
    "render_spectral",
    "render_validation",
    "render_zeta_result",
]
