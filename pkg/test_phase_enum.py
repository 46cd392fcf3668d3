#!/usr/bin/env python3
"""
Test script for exhaustive phase diagrams, feasible areas and gain curves
"""

from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from pydantic import ValidationError

from dyadbound.exceptions import EnumerationBudgetError
from dyadbound.schemas.graph import GeneratorSpec, GraphFamily
from dyadbound.schemas.phase import PhaseDiagram
from dyadbound.services.bounds_service import bounds_report
from dyadbound.services.dyadic_metrics import expected_dyads
from dyadbound.services.gain_service import (
    feasible_area,
    feasible_region_sweep,
    gain_curves,
    gain_row,
    mean_reduction,
)
from dyadbound.services.graph_generator import generate
from dyadbound.services.phase_enumerator import (
    enumerate_phase_diagram,
    enumerate_phase_sequence,
    extremal_dyads,
    unrank_block,
)


@pytest.fixture(scope="module")
def fourteen_nodes():
    spec = GeneratorSpec(family=GraphFamily.ERDOS_RENYI, node_count=14, edge_count=30, seed=42,
                         require_connected=True)
    return generate(spec)


def test_unranking_covers_every_subset_once():
    n, k = 9, 4
    member = unrank_block(n, k, 0, comb(n, k))
    subsets = [tuple(map(int, row.nonzero()[0])) for row in member]
    assert len(set(subsets)) == comb(n, k)
    assert set(subsets) == set(combinations(range(n), k))
    # colex order: rank 0 is the first k nodes
    assert subsets[0] == (0, 1, 2, 3)
    assert subsets[-1] == (5, 6, 7, 8)


def test_path_diagram(path4):
    diagram = enumerate_phase_diagram(path4, 2)
    assert diagram.cells == {(1, 1): 2, (2, 1): 1, (2, 0): 1, (3, 0): 2}
    assert diagram.total == 6


def test_triangle_diagram(triangle):
    assert enumerate_phase_diagram(triangle, 2).cells == {(2, 1): 3}


def test_empty_assignment_diagram(petersen):
    diagram = enumerate_phase_diagram(petersen, 0)
    assert diagram.cells == {(0, 0): 1}


def test_extremal_dyads(k4, path4, petersen):
    assert extremal_dyads(k4, 2) == (1, 1, 4, 4)
    assert extremal_dyads(path4, 2) == (0, 1, 1, 3)
    assert extremal_dyads(petersen, 10) == (15, 15, 0, 0)


def test_mode_cell_breaks_ties_by_smallest_cell(path4):
    assert enumerate_phase_diagram(path4, 2).mode_cell() == (1, 1)


def test_diagram_sequence_totals(triangle):
    diagrams = enumerate_phase_sequence(triangle)
    assert [d.total for d in diagrams] == [1, 3, 3, 1]


def test_enumeration_recovers_expected_dyads(petersen, fourteen_nodes):
    for g in (petersen, fourteen_nodes):
        for n1 in range(g.node_count + 1):
            diagram = enumerate_phase_diagram(g, n1)
            expected_m11, expected_m10 = expected_dyads(g.node_count, g.edge_count, n1)
            assert diagram.mean_m11() == expected_m11
            assert diagram.mean_m10() == expected_m10


def test_label_swap_duality(fourteen_nodes):
    g = fourteen_nodes
    for n1 in range(g.node_count + 1):
        assert enumerate_phase_diagram(g, n1).cells == enumerate_phase_diagram(g, g.node_count - n1).m00_cells()


def test_results_do_not_depend_on_worker_count(fourteen_nodes):
    diagrams = [enumerate_phase_diagram(fourteen_nodes, 7, workers=workers) for workers in (1, 2, 8)]
    assert diagrams[0].total == comb(14, 7)
    assert diagrams[0] == diagrams[1] == diagrams[2]


def test_budget_refusal(fourteen_nodes):
    with pytest.raises(EnumerationBudgetError) as info:
        enumerate_phase_diagram(fourteen_nodes, 7, budget=1000)
    assert info.value.subsets == 3432
    assert info.value.exit_code == 75


def test_budget_from_environment(monkeypatch, fourteen_nodes):
    from dyadbound.config import get_settings

    monkeypatch.setenv("DYADBOUND_ENUMERATION_BUDGET", "100")
    get_settings.cache_clear()
    try:
        with pytest.raises(EnumerationBudgetError):
            enumerate_phase_diagram(fourteen_nodes, 3)
    finally:
        monkeypatch.delenv("DYADBOUND_ENUMERATION_BUDGET")
        get_settings.cache_clear()


def test_inconsistent_diagram_is_rejected():
    with pytest.raises(ValidationError):
        PhaseDiagram(node_count=4, edge_count=3, n1=2, cells={(1, 1): 5}, total=5)


def test_feasible_areas_on_k4(k4):
    report = bounds_report(k4, 2)
    assert feasible_area(report) == 2
    assert feasible_area(report, old=True) == 10
    assert feasible_area(bounds_report(k4, 0)) == 1


def test_gain_rows_on_k4(k4):
    row = gain_row(bounds_report(k4, 2))
    assert row.gain_lb_m10 == Fraction(4, 5)
    assert row.gain_total == Fraction(4, 5)
    empty = gain_row(bounds_report(k4, 0))
    assert empty.area_old == empty.area_new == 1
    assert empty.gain_total == 0


def test_regular_graph_upper_m11_gain_vanishes(petersen):
    row = gain_curves(petersen)[3]
    assert row.n1 == 3
    assert row.gain_ub_m11 == 0


def test_gain_rows_stay_in_unit_interval(corpus):
    for g in corpus[:60]:
        rows = gain_curves(g)
        assert [row.n1 for row in rows] == list(range(g.node_count + 1))
        for row in rows:
            assert row.area_new <= row.area_old
            assert row.gain_total == 1 - row.area_new / row.area_old
            for value in (row.gain_ub_m11, row.gain_ub_m10, row.gain_lb_m11, row.gain_lb_m10, row.gain_total):
                assert 0 <= value <= 1


def test_feasible_region_sweep(fourteen_nodes):
    rows, reduction = feasible_region_sweep(fourteen_nodes)
    assert len(rows) == 15
    assert reduction == mean_reduction(rows)
    assert 0 < reduction < 1
