import logging
from typing import Iterable

import networkx as nx

from dyadbound.exceptions import DegreeRangeError
from dyadbound.models.graph import Graph
from dyadbound.schemas.graph import DegreeSubsequence

logger = logging.getLogger(__name__)


def _check_length(g: Graph, n: int) -> None:
    if not 0 <= n <= g.node_count:
        raise DegreeRangeError(f"subsequence length {n} outside 0..{g.node_count}")


def head_sum(g: Graph, n: int) -> int:
    """Sum of the n largest degrees"""
    _check_length(g, n)
    return g.degree_prefix_sums[n]


def tail_sum(g: Graph, n: int) -> int:
    """Sum of the n smallest degrees"""
    _check_length(g, n)
    prefix = g.degree_prefix_sums
    return prefix[g.node_count] - prefix[g.node_count - n]


def head(g: Graph, n: int) -> DegreeSubsequence:
    _check_length(g, n)
    values = g.degree_sequence[:n]
    return DegreeSubsequence(values=values, kind="head", length=n, sum=head_sum(g, n))


def tail(g: Graph, n: int) -> DegreeSubsequence:
    _check_length(g, n)
    values = g.degree_sequence[g.node_count - n:]
    return DegreeSubsequence(values=values, kind="tail", length=n, sum=tail_sum(g, n))


def is_connected(g: Graph) -> bool:
    return g.is_connected


def is_regular(g: Graph) -> bool:
    """True iff head and tail sums agree for every length"""
    return all(head_sum(g, n) == tail_sum(g, n) for n in range(g.node_count + 1))


def erdos_gallai_graphic(seq: Iterable[int]) -> bool:
    """Whether the sequence is the degree sequence of some simple graph"""
    values = sorted((int(d) for d in seq), reverse=True)
    if any(d < 0 for d in values):
        return False
    if sum(values) % 2:
        return False
    return nx.is_valid_degree_sequence_erdos_gallai(values)
