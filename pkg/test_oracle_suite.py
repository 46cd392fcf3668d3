#!/usr/bin/env python3
"""
Test script checking the bounds against exhaustive enumeration on a seeded corpus
"""

from math import comb

from dyadbound.services.bounds_service import bounds_sweep, dominance_table
from dyadbound.services.dyadic_metrics import expected_dyads
from dyadbound.services.phase_enumerator import enumerate_phase_diagram


def test_corpus_shape(corpus):
    assert len(corpus) >= 200
    assert all(4 <= g.node_count <= 14 and g.is_connected for g in corpus)


def test_bounds_sandwich_exact_extrema(corpus):
    violations = []
    for index, g in enumerate(corpus):
        for report in bounds_sweep(g):
            diagram = enumerate_phase_diagram(g, report.n1)
            assert diagram.total == comb(g.node_count, report.n1)
            min_m11, max_m11, min_m10, max_m10 = diagram.extremal()
            if not (report.lb_m11 <= min_m11 and max_m11 <= report.ub_m11
                    and report.lb_m10 <= min_m10 and max_m10 <= report.ub_m10):
                violations.append((index, report.n1))
    assert violations == []


def test_dominance_frequency(corpus):
    table = dominance_table(corpus)
    print(f"dominance over {table['pairs']} (graph, n1) pairs: "
          f"ub_m11 {float(table['frequency_ub_m11']):.3f}, ub_m10 {float(table['frequency_ub_m10']):.3f}, "
          f"either {float(table['frequency_any']):.3f}")
    assert table["violations"] == 0
    assert table["frequency_any"] >= 0.01


def test_expectation_recovery_on_small_graphs(corpus):
    small = [g for g in corpus if g.node_count <= 12]
    assert small
    for g in small:
        for n1 in range(g.node_count + 1):
            diagram = enumerate_phase_diagram(g, n1)
            expected_m11, expected_m10 = expected_dyads(g.node_count, g.edge_count, n1)
            assert diagram.mean_m11() == expected_m11
            assert diagram.mean_m10() == expected_m10


def test_small_network_expectations():
    expected_m11, expected_m10 = expected_dyads(25, 32, 10)
    assert abs(float(expected_m11) - 4.8) < 1e-12
    assert abs(float(expected_m10) - 16.0) < 1e-12
