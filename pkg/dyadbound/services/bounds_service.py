"""
Bounds on the dyad counts m11 and m10 for a fixed number n1 of 1-labeled nodes.

The classic bounds use only M and n1. The structural bounds use the degree
sequence: a 1-labeled set can hold at most as many 1-1 edges as its largest
degrees allow, and at least as many 1-0 edges as its smallest degrees force
out of a clique. Everything is exact integer arithmetic.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Iterable, List, Optional

from dyadbound.exceptions import DegreeRangeError
from dyadbound.models.graph import Graph
from dyadbound.schemas.bounds import BoundsReport
from dyadbound.services.degree_sequence import head_sum, tail_sum
from dyadbound.services.dyadic_metrics import expected_dyads, ratio

logger = logging.getLogger(__name__)


def _check_n1(g: Graph, n1: int) -> None:
    if not 0 <= n1 <= g.node_count:
        raise DegreeRangeError(f"n1={n1} outside 0..{g.node_count}")


def ub_m11_old(edge_count: int, n1: int) -> int:
    return min(edge_count, comb(n1, 2))


def ub_m10_old(edge_count: int, n1: int, n0: int) -> int:
    return min(edge_count, n1 * n0)


def ub_m11(g: Graph, n1: int) -> int:
    _check_n1(g, n1)
    capped = sum(min(d, n1 - 1) for d in g.degree_sequence[:n1])
    return min(g.edge_count, comb(n1, 2), -(-capped // 2))


def ub_m10(g: Graph, n1: int) -> int:
    _check_n1(g, n1)
    n0 = g.node_count - n1
    from_ones = sum(min(d, n0) for d in g.degree_sequence[:n1])
    from_zeros = sum(min(d, n1) for d in g.degree_sequence[:n0])
    return min(g.edge_count, n1 * n0, from_ones, from_zeros)


def lb_m11(g: Graph, n1: int) -> int:
    _check_n1(g, n1)
    n0 = g.node_count - n1
    return max(0, (tail_sum(g, n1) - head_sum(g, n0)) // 2)


def lb_m10(g: Graph, n1: int, warn: bool = True) -> int:
    """Lower bound on m10; the floor of one edge needs a connected graph"""
    _check_n1(g, n1)
    if n1 in (0, g.node_count):
        return 0
    forced = tail_sum(g, n1) - n1 * (n1 - 1)
    if not g.is_connected:
        if warn:
            logger.warning(f"Graph is disconnected; lb_m10 for n1={n1} drops the one-edge floor")
        return max(0, forced)
    return max(1, forced)


def bounds_report(g: Graph, n1: int, warn: bool = True) -> BoundsReport:
    """All bounds for one n1, with the D and H ranges they induce"""
    _check_n1(g, n1)
    n0 = g.node_count - n1
    lower_m11, upper_m11 = lb_m11(g, n1), ub_m11(g, n1)
    lower_m10, upper_m10 = lb_m10(g, n1, warn=warn), ub_m10(g, n1)

    d_min = d_max = h_min = h_max = None
    if g.node_count >= 2:
        expected_m11, expected_m10 = expected_dyads(g.node_count, g.edge_count, n1)
        d_min, d_max = ratio(lower_m11, expected_m11), ratio(upper_m11, expected_m11)
        h_min, h_max = ratio(lower_m10, expected_m10), ratio(upper_m10, expected_m10)

    return BoundsReport(
        n1=n1,
        ub_m11_old=ub_m11_old(g.edge_count, n1),
        ub_m10_old=ub_m10_old(g.edge_count, n1, n0),
        ub_m11=upper_m11,
        ub_m10=upper_m10,
        lb_m11=lower_m11,
        lb_m10=lower_m10,
        d_min=d_min,
        d_max=d_max,
        h_min=h_min,
        h_max=h_max,
    )


def bounds_sweep(g: Graph, n1_values: Optional[Iterable[int]] = None) -> List[BoundsReport]:
    """Reports for every requested n1, all of 0..N by default"""
    if n1_values is None:
        n1_values = range(g.node_count + 1)
    if not g.is_connected:
        logger.warning(f"Computing bounds on a disconnected graph (N={g.node_count}, M={g.edge_count})")
    return [bounds_report(g, n1, warn=False) for n1 in n1_values]


def dominance_table(graphs: Iterable[Graph]) -> dict:
    """How often the structural upper bounds improve on the classic ones"""
    pairs = strict_m11 = strict_m10 = strict_any = violations = 0
    for g in graphs:
        for report in bounds_sweep(g):
            better_m11 = report.ub_m11 < report.ub_m11_old
            better_m10 = report.ub_m10 < report.ub_m10_old
            pairs += 1
            strict_m11 += better_m11
            strict_m10 += better_m10
            strict_any += better_m11 or better_m10
            violations += report.ub_m11 > report.ub_m11_old or report.ub_m10 > report.ub_m10_old

    def frequency(count: int) -> Fraction:
        return Fraction(count, pairs) if pairs else Fraction(0)

    return {
        "pairs": pairs,
        "violations": violations,
        "strict_ub_m11": strict_m11,
        "strict_ub_m10": strict_m10,
        "strict_any": strict_any,
        "frequency_ub_m11": frequency(strict_m11),
        "frequency_ub_m10": frequency(strict_m10),
        "frequency_any": frequency(strict_any),
    }
