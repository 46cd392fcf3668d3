"""
Exact phase diagrams by exhaustive enumeration of all n1-subsets.

The C(N, n1) subsets are numbered by their colexicographic rank. The rank
space is cut into contiguous blocks; each block is unranked in one vectorized
pass (combinatorial number system), its dyad counts evaluated column-wise
over the edge list, and tallied. Blocks depend only on the graph, never on
the worker count, and tallies merge by summation, so results are identical
for any number of workers.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Dict, List, Optional, Tuple

import numpy as np

from dyadbound.config import get_settings
from dyadbound.exceptions import DegreeRangeError, EnumerationBudgetError
from dyadbound.models.graph import Graph
from dyadbound.schemas.phase import Cell, PhaseDiagram

logger = logging.getLogger(__name__)


def binomial_table(node_count: int, k: int) -> np.ndarray:
    """table[i, c] = C(c, i) for 0 <= i <= k, 0 <= c < N"""
    table = np.zeros((k + 1, node_count), dtype=np.int64)
    for i in range(k + 1):
        table[i] = [comb(c, i) for c in range(node_count)]
    return table


def unrank_block(node_count: int, k: int, start: int, stop: int, table: Optional[np.ndarray] = None) -> np.ndarray:
    """Membership matrix (stop - start, N) of the k-subsets with colex ranks in [start, stop)"""
    if table is None:
        table = binomial_table(node_count, k)
    ranks = np.arange(start, stop, dtype=np.int64)
    rows = np.arange(ranks.size)
    member = np.zeros((ranks.size, node_count), dtype=bool)
    for i in range(k, 0, -1):
        # largest c with C(c, i) <= rank
        c = np.searchsorted(table[i], ranks, side="right") - 1
        ranks -= table[i][c]
        member[rows, c] = True
    return member


def _tally_block(edges: np.ndarray, degrees: np.ndarray, edge_count: int, k: int, complement: bool,
                 start: int, stop: int) -> Dict[Cell, int]:
    node_count = degrees.size
    member = unrank_block(node_count, k, start, stop)
    if complement:
        member = ~member
    m11 = np.count_nonzero(member[:, edges[:, 0]] & member[:, edges[:, 1]], axis=1)
    m10 = member.astype(np.int64) @ degrees - 2 * m11
    keys, counts = np.unique(m10 * (edge_count + 1) + m11, return_counts=True)
    return {(int(key // (edge_count + 1)), int(key % (edge_count + 1))): int(count)
            for key, count in zip(keys.tolist(), counts.tolist())}


def _blocks(total: int, rows: int) -> List[Tuple[int, int]]:
    return [(start, min(start + rows, total)) for start in range(0, total, rows)]


def enumerate_phase_diagram(g: Graph, n1: int, workers: Optional[int] = None,
                            budget: Optional[int] = None) -> PhaseDiagram:
    """Exact (m10, m11) degeneracies over all C(N, n1) assignments"""
    settings = get_settings()
    workers = workers or settings.workers
    budget = budget or settings.enumeration_budget
    node_count = g.node_count
    if not 0 <= n1 <= node_count:
        raise DegreeRangeError(f"n1={n1} outside 0..{node_count}")

    total = comb(node_count, n1)
    if total > budget:
        raise EnumerationBudgetError(total, budget)

    # enumerate the smaller side so every table entry stays within C(N, k)
    complement = n1 > node_count - n1
    k = node_count - n1 if complement else n1
    rows = max(1024, settings.enumeration_block_cells // (node_count + g.edge_count + 1))
    blocks = _blocks(total, rows)
    args = (g.edge_array, g.degree_array, g.edge_count, k, complement)
    logger.debug(f"Enumerating C({node_count},{n1})={total} subsets in {len(blocks)} blocks with {workers} workers")

    tally: Counter = Counter()
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(blocks))) as executor:
            futures = [executor.submit(_tally_block, *args, start, stop) for start, stop in blocks]
            for future in futures:
                tally.update(future.result())
    else:
        for start, stop in blocks:
            tally.update(_tally_block(*args, start, stop))

    return PhaseDiagram(
        node_count=node_count,
        edge_count=g.edge_count,
        n1=n1,
        cells=dict(sorted(tally.items())),
        total=total,
    )


def enumerate_phase_sequence(g: Graph, workers: Optional[int] = None,
                             budget: Optional[int] = None) -> List[PhaseDiagram]:
    """The N+1 diagrams for n1 = 0..N"""
    diagrams = []
    for n1 in range(g.node_count + 1):
        diagrams.append(enumerate_phase_diagram(g, n1, workers=workers, budget=budget))
    logger.info(f"Enumerated {2 ** g.node_count} assignments across {g.node_count + 1} phase diagrams")
    return diagrams


def extremal_dyads(g: Graph, n1: int, workers: Optional[int] = None,
                   budget: Optional[int] = None) -> Tuple[int, int, int, int]:
    """(min_m11, max_m11, min_m10, max_m10) over every n1-subset"""
    return enumerate_phase_diagram(g, n1, workers=workers, budget=budget).extremal()
