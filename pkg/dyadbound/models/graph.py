from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from dyadbound.exceptions import GraphValidationError

Edge = Tuple[int, int]


class Graph:
    """Immutable simple undirected graph over dense node ids 0..N-1

    Original node labels are kept in ``labels`` for output. The degree
    sequence is non-increasing with ties ordered by node id.
    """

    def __init__(self, node_count: int, edges: Iterable[Edge], labels: Optional[Sequence[str]] = None):
        if node_count < 1:
            raise GraphValidationError("graph must have at least one node")

        adjacency: List[set] = [set() for _ in range(node_count)]
        normalized = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphValidationError(f"edge ({u}, {v}) references a node outside 0..{node_count - 1}")
            if u == v:
                raise GraphValidationError(f"self-loop on node {u} is not allowed (graph must be simple)")
            if v in adjacency[u]:
                raise GraphValidationError(f"duplicate edge ({u}, {v}) is not allowed (graph must be simple)")
            adjacency[u].add(v)
            adjacency[v].add(u)
            normalized.append((u, v) if u < v else (v, u))

        if labels is None:
            labels = [str(i) for i in range(node_count)]
        elif len(labels) != node_count:
            raise GraphValidationError(f"expected {node_count} labels, got {len(labels)}")

        self._node_count = node_count
        self._edges: Tuple[Edge, ...] = tuple(sorted(normalized))
        self._adjacency: Tuple[FrozenSet[int], ...] = tuple(frozenset(a) for a in adjacency)
        self._labels: Tuple[str, ...] = tuple(str(label) for label in labels)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Build from a networkx graph, relabeling nodes in sorted order"""
        order = sorted(graph.nodes())
        index: Dict[Hashable, int] = {node: i for i, node in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in graph.edges()]
        return cls(len(order), edges, [str(node) for node in order])

    @property
    def node_count(self) -> int:
        return self._node_count

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """Per-node degrees in node-id order"""
        return tuple(len(a) for a in self._adjacency)

    @cached_property
    def nodes_by_degree(self) -> Tuple[int, ...]:
        return tuple(sorted(range(self._node_count), key=lambda i: (-self.degrees[i], i)))

    @cached_property
    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(self.degrees[i] for i in self.nodes_by_degree)

    @cached_property
    def degree_prefix_sums(self) -> Tuple[int, ...]:
        sums = [0]
        for d in self.degree_sequence:
            sums.append(sums[-1] + d)
        return tuple(sums)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an (M, 2) int64 array"""
        if not self._edges:
            return np.zeros((0, 2), dtype=np.int64)
        return np.asarray(self._edges, dtype=np.int64)

    @cached_property
    def degree_array(self) -> np.ndarray:
        return np.asarray(self.degrees, dtype=np.int64)

    @cached_property
    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._node_count))
        graph.add_edges_from(self._edges)
        return graph

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._node_count == other._node_count and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._node_count, self._edges))

    def __repr__(self):
        return f"<Graph(N={self.node_count}, M={self.edge_count})>"
