"""Command-line entrypoint: ``hyperzeta <command> ...``.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal
cross-check mismatch, 4 ``distinguish`` found the graphs different.
``ramanujan`` exits 0 for any verdict and 3 when the pole audit
contradicts a Yes or No verdict.
"""

from __future__ import annotations

import argparse
import asyncio
import dataclasses
import logging
import sys
from concurrent.futures import Executor, ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Any, Callable, List, Optional, Sequence

from hyperzeta.algebra.poly import char_poly
from hyperzeta.config import Settings, load_settings
from hyperzeta.hypergraph import adjacency_of_hypergraph, dual_of, regularity_of, validate
from hyperzeta.linegraph import is_strongly_connected, line_graph_of
from hyperzeta.models import (
    CollapseMode,
    DistinguishVerdict,
    Hypergraph,
    RamanujanVerdict,
    ValidationReport,
)
from hyperzeta.services import reporting
from hyperzeta.services.distinguish import (
    adjacency_char_poly,
    compare_invariants,
    ihara_zeta_graph,
    invariant_multiset,
)
from hyperzeta.services.oracle import oracle_table
from hyperzeta.services.spectra import (
    obvious_eigenvalues,
    pole_audit,
    ramanujan_check,
    riemann_hypothesis_check,
    squared_adjacency_negative_roots,
    verify_char_relations,
)
from hyperzeta.services.zeta import (
    cross_validate,
    evenness_report,
    zeta_via_bass,
    zeta_via_hashimoto,
    zeta_via_linegraph,
)
from hyperzeta.storage.hgfile import read_hypergraph

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_DISTINGUISHED = 4


class _ArgumentParser(argparse.ArgumentParser):
    """argparse reports usage errors with status 2; ours is 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("tolerance must be non-negative")
    return value


def _clique_set(text: str) -> List[List[int]]:
    try:
        return [[int(v) for v in part.split(",")] for part in text.split(";") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cliques look like '0,1,2;3,4,5', got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="hyperzeta", description="Zeta functions of finite hypergraphs")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level")
    commands = parser.add_subparsers(dest="command", required=True)

    zeta = commands.add_parser("zeta", help="Compute 1/zeta(u) and cross-check the routes")
    zeta.add_argument("file")
    zeta.add_argument("--route", choices=["linegraph", "bass", "hashimoto", "all"], default="all")
    zeta.add_argument("--seeds", type=int, default=None, help="Orientation seeds for --route all")

    oracle = commands.add_parser("oracle", help="Compare series, Euler product and trace expansions")
    oracle.add_argument("file")
    oracle.add_argument("--order", type=int, required=True)

    spectra = commands.add_parser("spectra", help="Characteristic polynomials and their relations")
    spectra.add_argument("file")

    ramanujan = commands.add_parser("ramanujan", help="Ramanujan verdict, pole audit and Riemann hypothesis")
    ramanujan.add_argument("file")
    ramanujan.add_argument("--tolerance", type=_fraction, default=None)

    distinguish = commands.add_parser("distinguish", help="Separate two graphs by clique collapse")
    distinguish.add_argument("first")
    distinguish.add_argument("second")
    distinguish.add_argument("--k", type=int, default=3)
    distinguish.add_argument(
        "--mode", choices=[mode.value for mode in CollapseMode], default=CollapseMode.DISJOINT_PAIRS.value
    )
    distinguish.add_argument(
        "--cliques",
        type=_clique_set,
        action="append",
        help="One explicit collapse choice, e.g. '0,1,2;3,4,5' (repeatable, --mode explicit)",
    )

    check = commands.add_parser("validate", help="Report the conditions the zeta routes need")
    check.add_argument("file")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    if getattr(args, "seeds", None) is not None and args.seeds < 0:
        build_parser().error("--seeds must be non-negative")
    if getattr(args, "order", None) is not None and args.order < 1:
        build_parser().error("--order must be at least 1")
    if getattr(args, "k", None) is not None and args.k < 3:
        build_parser().error("--k must be at least 3")
    if getattr(args, "mode", None) == CollapseMode.EXPLICIT.value and not args.cliques:
        build_parser().error("--mode explicit needs at least one --cliques")
    return args


async def _offload(executor: Optional[Executor], fn: Callable[..., Any], *args: Any) -> Any:
    if executor is None:
        return fn(*args)
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(executor, partial(fn, *args))


def _emit(lines: List[str]) -> None:
    for line in lines:
        print(line)


async def _run_zeta(args: argparse.Namespace, settings: Settings, executor: Optional[Executor]) -> int:
    h = read_hypergraph(args.file)
    if args.route == "all":
        seeds = settings.compute.orientation_seeds if args.seeds is None else args.seeds
        report = cross_validate(h, seeds, executor)
        _emit(reporting.render_cross_validation(report, evenness_report(h)))
        return EXIT_OK
    if args.route == "linegraph":
        results = [zeta_via_linegraph(h, executor=executor)]
    elif args.route == "bass":
        results = [zeta_via_bass(h, executor)]
    else:
        results = list(zeta_via_hashimoto(h, executor))
    for result in results:
        _emit(reporting.render_zeta_result(result))
    return EXIT_OK


async def _run_oracle(args: argparse.Namespace, settings: Settings, executor: Optional[Executor]) -> int:
    h = read_hypergraph(args.file)
    table = oracle_table(h, args.order, settings.compute.max_enumerated_walks)
    _emit(reporting.render_oracle(table))
    return EXIT_OK if table.agree else EXIT_MISMATCH


async def _run_spectra(args: argparse.Namespace, settings: Settings, executor: Optional[Executor]) -> int:
    h = read_hypergraph(args.file)
    regularity = regularity_of(h)
    if regularity is None:
        p, p_dual = await asyncio.gather(
            _offload(executor, char_poly, adjacency_of_hypergraph(h)),
            _offload(executor, char_poly, adjacency_of_hypergraph(dual_of(h))),
        )
        _emit([
            reporting.render_polynomial("char_poly", p),
            reporting.render_polynomial("char_poly_dual", p_dual),
            "regularity: none",
        ])
        return EXIT_OK
    relations = verify_char_relations(h)
    lines = [f"regularity: {regularity}"]
    lines.extend(reporting.render_char_relations(relations))
    obvious = obvious_eigenvalues(h)
    if obvious is not None:
        lines.append(f"obvious_eigenvalue: {obvious.value} x{obvious.multiplicity} ({obvious.side.value})")
    negative = squared_adjacency_negative_roots(h)
    lines.append(f"bipartite_squared_negative_roots: {negative}")
    _emit(lines)
    ok = relations.eq2 and relations.eq3 and relations.eq4 and negative == 0
    return EXIT_OK if ok else EXIT_MISMATCH


async def _run_ramanujan(args: argparse.Namespace, settings: Settings, executor: Optional[Executor]) -> int:
    h = read_hypergraph(args.file)
    tolerance = settings.compute.ramanujan_tolerance if args.tolerance is None else args.tolerance
    spectral, poles, rh = await asyncio.gather(
        _offload(executor, ramanujan_check, h, tolerance),
        _offload(executor, pole_audit, h),
        _offload(executor, riemann_hypothesis_check, h),
    )
    lines = reporting.render_spectral(spectral)
    lines.extend(reporting.render_poles(poles))
    lines.append(f"riemann_hypothesis: {'true' if rh else 'false'}")
    _emit(lines)
    # any verdict is a result; only a pole audit that contradicts it is a failed check
    if spectral.ramanujan is RamanujanVerdict.BOUNDARY_WITHIN_TOLERANCE:
        return EXIT_OK
    if poles.on_critical_circle != (spectral.ramanujan is RamanujanVerdict.YES):
        log.error("pole audit disagrees with Ramanujan verdict %s", spectral.ramanujan.value)
        return EXIT_MISMATCH
    return EXIT_OK


async def _run_distinguish(args: argparse.Namespace, settings: Settings, executor: Optional[Executor]) -> int:
    g1 = read_hypergraph(args.first)
    g2 = read_hypergraph(args.second)
    mode = CollapseMode(args.mode)
    first, second, p1, p2, z1, z2 = await asyncio.gather(
        _offload(executor, invariant_multiset, g1, args.k, mode, args.cliques),
        _offload(executor, invariant_multiset, g2, args.k, mode, args.cliques),
        _offload(executor, adjacency_char_poly, g1),
        _offload(executor, adjacency_char_poly, g2),
        _offload(executor, ihara_zeta_graph, g1),
        _offload(executor, ihara_zeta_graph, g2),
    )
    report = compare_invariants(p1 == p2, z1 == z2, first, second)
    _emit(reporting.render_distinguish(report))
    return EXIT_DISTINGUISHED if report.verdict is DistinguishVerdict.DISTINGUISHED else EXIT_OK


def validate_with_line_graph(h: Hypergraph) -> ValidationReport:
    report = validate(h)
    strongly = is_strongly_connected(line_graph_of(h))
    warnings = list(report.warnings)
    if not strongly:
        message = "line graph is not strongly connected"
        log.warning(message)
        warnings.append(message)
    return dataclasses.replace(report, line_graph_strongly_connected=strongly, warnings=tuple(warnings))


async def _run_validate(args: argparse.Namespace, settings: Settings, executor: Optional[Executor]) -> int:
    report = validate_with_line_graph(read_hypergraph(args.file))
    _emit(reporting.render_validation(report))
    # leaves are pruned by the routes; only a disconnected incidence graph is fatal
    return EXIT_OK if report.connected else EXIT_INVALID


_COMMANDS = {
    "zeta": _run_zeta,
    "oracle": _run_oracle,
    "spectra": _run_spectra,
    "ramanujan": _run_ramanujan,
    "distinguish": _run_distinguish,
    "validate": _run_validate,
}


async def app(args: argparse.Namespace, settings: Settings) -> int:
    executor: Optional[Executor] = None
    if settings.compute.threads > 1:
        executor = ProcessPoolExecutor(max_workers=settings.compute.threads)
    try:
        return await _COMMANDS[args.command](args, settings, executor)
    finally:
        if executor is not None:
            executor.shutdown()


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        settings = load_settings()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    level = logging.INFO if args.verbose else settings.log_level
    logging.basicConfig(level=level)
    try:
        return asyncio.run(app(args, settings))
    except (ValueError, OSError) as exc:
        log.debug("invalid input", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except RuntimeError as exc:
        log.exception("cross-check failed: %s", exc)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
