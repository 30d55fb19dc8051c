from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from hyperzeta.algebra.poly import IntPoly
from hyperzeta.hypergraph import NotRegularError, dual_of, regularity_of
from hyperzeta.models import FunctionalEquationForm, Hypergraph, Route, ZetaResult
from hyperzeta.routes import BassRoute, HashimotoRoute, LineGraphRoute, ValidationError
from hyperzeta.services import zeta as zeta_service
from hyperzeta.services.zeta import (
    FunctionalEquationError,
    RouteMismatchError,
    cross_validate,
    evenness_report,
    functional_equation_check,
    generic_functional_equation_check,
    zeta_reciprocal,
    zeta_via_bass,
    zeta_via_hashimoto,
    zeta_via_linegraph,
)

K4_COLLAPSED_GOLDEN = IntPoly.of((1, -1)) * IntPoly.of((1, 1, 1, -5, -5, -5, 4, 4, 4))
K4_COLLAPSED_BIPARTITE = IntPoly.of((1, 0, -1)) * IntPoly.of(
    (1, 0, 1, 0, 1, 0, -5, 0, -5, 0, -5, 0, 4, 0, 4, 0, 4)
)


def _p(*coefficients: int) -> IntPoly:
    return IntPoly.of(coefficients)


def test_k4_collapsed_golden_by_every_general_route(k4_collapsed) -> None:
    assert zeta_via_linegraph(k4_collapsed).reciprocal == K4_COLLAPSED_GOLDEN
    bass = zeta_via_bass(k4_collapsed)
    assert bass.reciprocal == K4_COLLAPSED_GOLDEN
    assert bass.bipartite_reciprocal == K4_COLLAPSED_BIPARTITE
    assert K4_COLLAPSED_GOLDEN.to_text() == "1 0 0 -6 0 0 9 0 0 -4"


def test_k4_collapsed_cross_validation(k4_collapsed) -> None:
    report = cross_validate(k4_collapsed, seeds=3)
    assert report.reciprocal == K4_COLLAPSED_GOLDEN
    assert report.degree == report.expected_degree == 9
    assert report.graph_parity_obstruction
    assert [r.route for r in report.results] == [Route.LINE_GRAPH, Route.BASS]
    assert not evenness_report(k4_collapsed).even


@pytest.mark.parametrize(
    "name, expected",
    [
        ("k3", _p(1, 0, 0, -1) ** 2),
        ("c4", _p(1, 0, 0, 0, -1) ** 2),
        ("k4", _p(1, -1) ** 3 * _p(1, 1) ** 2 * _p(1, -2) * _p(1, 1, 2) ** 3),
        ("fano", _p(1, -1) ** 8 * _p(1, -4) * _p(1, 2, 4) ** 6),
    ],
)
def test_known_reciprocals(fixture, name: str, expected: IntPoly) -> None:
    h = fixture(name)
    report = cross_validate(h, seeds=2)
    assert report.reciprocal == expected
    assert report.degree == h.total_order
    assert {r.route for r in report.results} == {
        Route.LINE_GRAPH,
        Route.BASS,
        Route.HASHIMOTO_1,
        Route.HASHIMOTO_2,
    }


def test_routes_agree_on_random_hypergraphs(random_instances) -> None:
    for h in random_instances(60, max_edges=5):
        line = zeta_via_linegraph(h).reciprocal
        assert zeta_via_bass(h).reciprocal == line
        assert zeta_via_bass(dual_of(h)).reciprocal == line
        assert line.degree == h.total_order


@pytest.mark.slow
def test_cross_validation_on_many_random_hypergraphs(random_instances) -> None:
    for h in random_instances(200):
        report = cross_validate(h, seeds=10)
        assert report.degree == h.total_order


def test_hashimoto_forms_on_random_regular_hypergraphs(regular_instances) -> None:
    for h in regular_instances(20):
        first, second = zeta_via_hashimoto(h)
        assert first.reciprocal == second.reciprocal == zeta_via_bass(h).reciprocal


def test_hashimoto_dualizes_when_degree_is_smaller() -> None:
    # (2, 3)-regular: three vertices each in two of two triples
    h = Hypergraph.from_edges(3, [[0, 1, 2], [0, 1, 2]])
    first, second = zeta_via_hashimoto(h)
    assert any("dual" in message for message in first.warnings)
    assert first.reciprocal == second.reciprocal == zeta_via_bass(h).reciprocal


def test_hashimoto_needs_regularity(k4_collapsed) -> None:
    with pytest.raises(NotRegularError):
        HashimotoRoute(1).compute(k4_collapsed)
    with pytest.raises(ValueError):
        HashimotoRoute(3)


def test_executor_does_not_change_results(fixture) -> None:
    h = fixture("prism6")
    with ThreadPoolExecutor(max_workers=2) as executor:
        parallel = cross_validate(h, seeds=2, executor=executor)
        line = LineGraphRoute(executor=executor).compute(h)
    assert parallel.reciprocal == line.reciprocal == BassRoute().compute(h).reciprocal


def test_tree_prunes_to_unit_reciprocal() -> None:
    tree = Hypergraph.from_edges(4, [[0, 1], [1, 2], [1, 3]])
    result = zeta_via_linegraph(tree)
    assert result.reciprocal == IntPoly.one()
    assert any("nothing survives" in message for message in result.warnings)
    assert cross_validate(tree, seeds=1).degree == 0


def test_pendant_path_does_not_change_zeta(fixture) -> None:
    with_tail = Hypergraph.from_edges(5, [[0, 1], [1, 2], [0, 2], [2, 3], [3, 4]])
    result = zeta_via_bass(with_tail)
    assert result.reciprocal == zeta_reciprocal(fixture("k3"))
    assert any("pruned" in message for message in result.warnings)


def test_disconnected_input_is_rejected() -> None:
    h = Hypergraph.from_edges(6, [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]])
    with pytest.raises(ValidationError):
        zeta_via_linegraph(h)


def test_k3_warns_about_line_graph(fixture) -> None:
    result = zeta_via_linegraph(fixture("k3"))
    assert "line graph is not strongly connected" in result.warnings


def test_route_mismatch_is_reported(monkeypatch, k4_collapsed) -> None:
    def broken(h, executor=None):
        return ZetaResult(_p(1, 1), Route.BASS)

    monkeypatch.setattr(zeta_service, "zeta_via_bass", broken)
    with pytest.raises(RouteMismatchError) as info:
        cross_validate(k4_collapsed, seeds=0)
    assert "u^1" in info.value.diff


def test_evenness(fixture) -> None:
    assert evenness_report(fixture("c4")).even
    assert evenness_report(fixture("k33")).unimodular_implied
    assert not evenness_report(fixture("k3")).even
    assert not evenness_report(fixture("k4_collapsed")).even


def test_bipartite_graphs_have_even_zeta(bipartite_instances) -> None:
    for h in bipartite_instances(10):
        report = evenness_report(h)
        assert report.even
        assert report.unimodular_implied


@pytest.mark.parametrize("form", list(FunctionalEquationForm))
@pytest.mark.parametrize("name", ["fano", "k4", "petersen", "c5"])
def test_functional_equations(fixture, name: str, form: FunctionalEquationForm) -> None:
    h = fixture(name)
    for u in (Fraction(1, 3), Fraction(2, 7), Fraction(-5, 11)):
        assert functional_equation_check(h, form, u)


def _sample_points(rng, count: int):
    # numerator >= 2 and a prime denominator above q keep u and 1/(qu) off every rational zero
    for _ in range(count):
        yield Fraction(rng.choice([-1, 1]) * rng.randint(2, 9), rng.choice([11, 13, 17, 19, 23]))


def test_functional_equations_on_random_regular_hypergraphs(rng, regular_instances) -> None:
    for h in regular_instances(4):
        for u in _sample_points(rng, 20):
            for form in FunctionalEquationForm:
                assert functional_equation_check(h, form, u)


@pytest.mark.parametrize("form", list(FunctionalEquationForm))
def test_functional_equation_fixed_point(fixture, form: FunctionalEquationForm) -> None:
    # q = 4 for the Fano plane, so u = 1/2 is its own mirror
    assert functional_equation_check(fixture("fano"), form, Fraction(1, 2))


def test_functional_equation_on_dualized_hypergraph() -> None:
    h = Hypergraph.from_edges(3, [[0, 1, 2], [0, 1, 2]])
    assert regularity_of(h) == (2, 3)
    for form in FunctionalEquationForm:
        assert functional_equation_check(h, form, Fraction(1, 5))


def test_functional_equation_at_a_pole(fixture) -> None:
    with pytest.raises(FunctionalEquationError):
        functional_equation_check(fixture("fano"), FunctionalEquationForm.XI_1, Fraction(1))


def test_generic_functional_equation_signs(fixture) -> None:
    fano = fixture("fano")
    u = Fraction(2, 9)
    assert generic_functional_equation_check(fano, _p(1, 0, 4), 1, u)
    assert generic_functional_equation_check(fano, _p(1, 0, -4), -1, u)
    assert generic_functional_equation_check(fano, _p(1, 0, -4), -1, u, variant=2)
    with pytest.raises(FunctionalEquationError):
        generic_functional_equation_check(fano, _p(1, 1), 1, u)
    with pytest.raises(ValueError):
        generic_functional_equation_check(fano, _p(1, 0, 4), 2, u)
