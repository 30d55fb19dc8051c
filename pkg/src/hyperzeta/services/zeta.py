"""Zeta computations across routes: agreement checks, functional equations, evenness."""

from __future__ import annotations

import logging
from concurrent.futures import Executor
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from hyperzeta.algebra.poly import IntPoly, coefficient_diff, eval_rational, is_even_poly
from hyperzeta.hypergraph import dual_of, prune_leaves, regularity_of, validate
from hyperzeta.models import (
    CrossValidationReport,
    EvennessReport,
    FunctionalEquationForm,
    Hypergraph,
    RegularShape,
    ZetaResult,
)
from hyperzeta.routes import BassRoute, HashimotoRoute, LineGraphRoute
from hyperzeta.routes.hashimoto import oriented_regular

log = logging.getLogger(__name__)


class RouteMismatchError(RuntimeError):
    """Raised when two computations of the same zeta reciprocal disagree."""

    def __init__(self, message: str, diff: str) -> None:
        super().__init__(f"{message}: {diff}")
        self.diff = diff


class FunctionalEquationError(ValueError):
    """Raised when a completed zeta function is undefined at the requested point."""


def zeta_via_linegraph(
    h: Hypergraph, orientation: Optional[int] = None, executor: Optional[Executor] = None
) -> ZetaResult:
    return LineGraphRoute(orientation, executor).compute(h)


def zeta_via_bass(h: Hypergraph, executor: Optional[Executor] = None) -> ZetaResult:
    return BassRoute(executor).compute(h)


def zeta_via_hashimoto(h: Hypergraph, executor: Optional[Executor] = None) -> Tuple[ZetaResult, ZetaResult]:
    return HashimotoRoute(1, executor).compute(h), HashimotoRoute(2, executor).compute(h)


def zeta_reciprocal(h: Hypergraph) -> IntPoly:
    """``1 / zeta(u)`` by the cheapest general route."""
    return zeta_via_bass(h).reciprocal


def _run_all(
    calls: Sequence[Tuple[Callable[..., object], tuple]], executor: Optional[Executor]
) -> List[object]:
    if executor is None:
        return [fn(*args) for fn, args in calls]
    futures = [executor.submit(fn, *args) for fn, args in calls]
    return [future.result() for future in futures]


def _expect_equal(label: str, expected: IntPoly, actual: IntPoly) -> None:
    if expected != actual:
        diff = coefficient_diff(expected, actual)
        log.error("%s disagrees: %s", label, diff)
        raise RouteMismatchError(f"{label} disagrees", diff)


def cross_validate(
    h: Hypergraph, seeds: int = 10, executor: Optional[Executor] = None
) -> CrossValidationReport:
    """Compute every applicable route and insist they agree exactly.

    Also checks the degree law, the dual identity and independence from
    the clique-expansion orientation over ``seeds`` seeded orientations.
    """
    report = validate(h)
    regular = regularity_of(h)
    calls: List[Tuple[Callable[..., object], tuple]] = [
        (zeta_via_linegraph, (h,)),
        (zeta_via_bass, (h,)),
        (zeta_via_bass, (dual_of(h),)),
    ]
    calls.extend((zeta_via_linegraph, (h, seed)) for seed in range(seeds))
    if regular is not None:
        calls.append((zeta_via_hashimoto, (h,)))
    outcomes = _run_all(calls, executor)

    linegraph, bass, dual = outcomes[0], outcomes[1], outcomes[2]
    oriented = outcomes[3 : 3 + seeds]
    results: List[ZetaResult] = [linegraph, bass]
    if regular is not None:
        results.extend(outcomes[3 + seeds])

    reference = linegraph.reciprocal
    for result in results[1:]:
        _expect_equal(f"{result.route.value} route", reference, result.reciprocal)
    _expect_equal("dual hypergraph", reference, dual.reciprocal)
    for seed, result in enumerate(oriented):
        _expect_equal(f"orientation seed {seed}", reference, result.reciprocal)

    pruned = prune_leaves(h)
    expected_degree = pruned.hypergraph.total_order if pruned.hypergraph is not None else 0
    if reference.degree != expected_degree:
        raise RouteMismatchError(
            "degree law fails", f"degree {reference.degree} != total order {expected_degree}"
        )

    warnings: List[str] = []
    for result in results:
        for message in result.warnings:
            if message not in warnings:
                warnings.append(message)
    return CrossValidationReport(
        results=tuple(results),
        degree=reference.degree,
        expected_degree=expected_degree,
        dual_identity=True,
        orientation_seeds=seeds,
        graph_parity_obstruction=report.graph_parity_obstruction,
        warnings=tuple(warnings),
    )


def evenness_report(h: Hypergraph) -> EvennessReport:
    """``unimodular_implied`` is a one-way implication: False means no conclusion."""
    even = is_even_poly(zeta_reciprocal(h))
    return EvennessReport(even=even, unimodular_implied=even)


def _power(base: Fraction, exponent: int) -> Fraction:
    if base == 0 and exponent < 0:
        raise FunctionalEquationError("prefactor has a pole at this point")
    return base**exponent


def _prefactor(form: FunctionalEquationForm, shape: RegularShape, u: Fraction) -> Fraction:
    d, r, n1, n2, q = shape.d, shape.r, shape.n1, shape.n2, shape.q
    minus_chi = shape.minus_chi
    if form is FunctionalEquationForm.LAMBDA_1:
        return _power(1 - u, n1 + minus_chi) * _power(1 + (r - 1) * u, n2 - n1) * _power(1 - q * u, n1)
    if form is FunctionalEquationForm.LAMBDA_2:
        return _power(1 - u, n2 + minus_chi) * _power(1 + (d - 1) * u, n1 - n2) * _power(1 - q * u, n2)
    if form is FunctionalEquationForm.XI_1:
        return _power(1 - u, minus_chi) * _power(1 + (r - 1) * u, n2 - n1) * _power(1 + q * u * u, n1)
    return _power(1 - u, minus_chi) * _power(1 + (d - 1) * u, n1 - n2) * _power(1 + q * u * u, n2)


def _completed(reciprocal: IntPoly, u: Fraction, prefactor: Fraction) -> Fraction:
    denominator = eval_rational(reciprocal, u)
    if denominator == 0:
        raise FunctionalEquationError(f"zeta has a pole at u = {u}")
    return prefactor / denominator


def _regular_setup(h: Hypergraph, u: Fraction) -> Tuple[IntPoly, RegularShape, Fraction]:
    oriented, shape, _ = oriented_regular(h)
    u = Fraction(u)
    if u == 0 or shape.q == 0:
        raise FunctionalEquationError("u and q must be non-zero")
    reciprocal = HashimotoRoute(1).compute(oriented).reciprocal
    return reciprocal, shape, u


def functional_equation_check(h: Hypergraph, form: FunctionalEquationForm, u: Fraction) -> bool:
    """Evaluate the completed zeta function at ``u`` and ``1/(qu)`` exactly and compare."""
    reciprocal, shape, u = _regular_setup(h, u)
    mirror = 1 / (shape.q * u)
    left = _completed(reciprocal, u, _prefactor(form, shape, u))
    right = _completed(reciprocal, mirror, _prefactor(form, shape, mirror))
    log.debug("%s at u=%s: %s vs %s", form.value, u, left, right)
    return left == right


def generic_functional_equation_check(
    h: Hypergraph, p: IntPoly, sign: int, u: Fraction, variant: int = 1
) -> bool:
    """Completed zeta built from a caller-supplied ``p(u)``.

    ``variant=1`` uses ``p^n1 (1-u)^(-chi) (1+(r-1)u)^(n2-n1)``; ``variant=2``
    uses ``p^n2 (1-u)^(-chi) (1+(d-1)u)^(n1-n2)``. ``p`` must satisfy
    ``p(u)^e = sign (qu^2)^e p(1/(qu))^e`` for the matching exponent ``e``;
    otherwise FunctionalEquationError is raised.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    reciprocal, shape, u = _regular_setup(h, u)
    q = shape.q
    mirror = 1 / (q * u)
    eta = shape.n1 if variant == 1 else shape.n2

    def prefactor(x: Fraction) -> Fraction:
        if variant == 1:
            tail = _power(1 + (shape.r - 1) * x, shape.n2 - shape.n1)
        else:
            tail = _power(1 + (shape.d - 1) * x, shape.n1 - shape.n2)
        return _power(eval_rational(p, x), eta) * _power(1 - x, shape.minus_chi) * tail

    symmetric = eval_rational(p, u) ** eta == sign * (q * u * u) ** eta * eval_rational(p, mirror) ** eta
    if not symmetric:
        raise FunctionalEquationError(f"p does not satisfy the required symmetry at u = {u}")
    left = _completed(reciprocal, u, prefactor(u))
    right = _completed(reciprocal, mirror, prefactor(mirror))
    return left == sign * right


__all__ = [
    "FunctionalEquationError",
    "RouteMismatchError",
    "cross_validate",
    "evenness_report",
    "functional_equation_check",
    "generic_functional_equation_check",
    "zeta_reciprocal",
    "zeta_via_bass",
    "zeta_via_hashimoto",
    "zeta_via_linegraph",
]
