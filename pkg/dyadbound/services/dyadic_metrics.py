import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from dyadbound.exceptions import DegreeRangeError, DensityDomainError, GraphValidationError
from dyadbound.models.graph import Graph
from dyadbound.schemas.dyads import CharacteristicAssignment, DyadCounts, DyadStats

logger = logging.getLogger(__name__)


def count_dyads(g: Graph, a: CharacteristicAssignment) -> DyadCounts:
    """Classify every edge as 1-1, 1-0 or 0-0 by its endpoint labels"""
    if a.node_count != g.node_count:
        raise GraphValidationError(f"assignment has {a.node_count} labels, graph has {g.node_count} nodes")
    labels = np.asarray(a.labels, dtype=np.int64)
    edges = g.edge_array
    kinds = labels[edges[:, 0]] + labels[edges[:, 1]]
    m11 = int(np.count_nonzero(kinds == 2))
    m10 = int(np.count_nonzero(kinds == 1))
    return DyadCounts(m11=m11, m10=m10, m00=g.edge_count - m11 - m10)


def density(node_count: int, edge_count: int) -> Fraction:
    if node_count < 2:
        raise DensityDomainError(f"density is undefined for N={node_count}")
    return Fraction(2 * edge_count, node_count * (node_count - 1))


def expected_dyads(node_count: int, edge_count: int, n1: int) -> Tuple[Fraction, Fraction]:
    """Random-placement expectations (m̄11, m̄10), exact"""
    if not 0 <= n1 <= node_count:
        raise DegreeRangeError(f"n1={n1} outside 0..{node_count}")
    delta = density(node_count, edge_count)
    expected_m11 = Fraction(n1 * (n1 - 1), 2) * delta
    expected_m10 = n1 * (node_count - n1) * delta
    return expected_m11, expected_m10


def ratio(observed: int, expected: Fraction) -> Optional[Fraction]:
    """observed / expected, or None when the expectation is zero"""
    if expected <= 0:
        return None
    return Fraction(observed) / expected


def dyad_stats(node_count: int, edge_count: int, n1: int, counts: Optional[DyadCounts] = None) -> DyadStats:
    expected_m11, expected_m10 = expected_dyads(node_count, edge_count, n1)
    stats = DyadStats(
        node_count=node_count,
        edge_count=edge_count,
        n1=n1,
        density=density(node_count, edge_count),
        expected_m11=expected_m11,
        expected_m10=expected_m10,
    )
    if counts is None:
        return stats
    dyadicity, heterophilicity = dyadicity_heterophilicity(counts, stats)
    return stats.model_copy(update={"dyadicity": dyadicity, "heterophilicity": heterophilicity})


def dyadicity_heterophilicity(counts: DyadCounts, stats: DyadStats) -> Tuple[Optional[Fraction], Optional[Fraction]]:
    """D = m11 / m̄11 and H = m10 / m̄10; None where the expectation is zero"""
    return ratio(counts.m11, stats.expected_m11), ratio(counts.m10, stats.expected_m10)


def classify_dyadic_effect(d: Optional[Fraction], h: Optional[Fraction]) -> Dict[str, str]:
    """Regime labels for D (dyadic / anti-dyadic) and H (heterophilic / heterophobic)"""
    def label(value, above, below):
        if value is None:
            return "undefined"
        if value > 1:
            return above
        if value < 1:
            return below
        return "neutral"

    return {
        "dyadicity": label(d, "dyadic", "anti-dyadic"),
        "heterophilicity": label(h, "heterophilic", "heterophobic"),
    }


def analyze_assignment(g: Graph, a: CharacteristicAssignment) -> Tuple[DyadCounts, DyadStats]:
    """Counts, expectations and D/H for one labeled graph"""
    counts = count_dyads(g, a)
    stats = dyad_stats(g.node_count, g.edge_count, a.n1, counts)
    logger.info(f"Dyads m11={counts.m11} m10={counts.m10} m00={counts.m00} for n1={a.n1}")
    return counts, stats


def expected_curve(node_count: int, delta: Fraction) -> List[Dict[str, Fraction]]:
    """m̄11 and m̄10 against n1/N at a fixed density, n1 = 0..N"""
    if node_count < 1:
        raise DensityDomainError(f"expected values need N >= 1, got {node_count}")
    if not 0 <= delta <= 1:
        raise DensityDomainError(f"density {float(delta)} outside [0, 1]")
    rows = []
    for n1 in range(node_count + 1):
        rows.append({
            "n1": n1,
            "fraction": Fraction(n1, node_count),
            "density": delta,
            "expected_m11": Fraction(n1 * (n1 - 1), 2) * delta,
            "expected_m10": n1 * (node_count - n1) * delta,
        })
    return rows
