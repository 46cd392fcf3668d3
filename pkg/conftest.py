"""
Shared fixtures: small named graphs and a seeded corpus of connected graphs
"""

from math import comb
from typing import List

import networkx as nx
import numpy as np
import pytest

from dyadbound.models.graph import Graph
from dyadbound.schemas.graph import GeneratorSpec, GraphFamily
from dyadbound.services.graph_generator import generate

CORPUS_SEED = 20240917
CORPUS_SIZE = 210


@pytest.fixture
def path4() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star4() -> Graph:
    # centre 0 with three leaves
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def triangle() -> Graph:
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4() -> Graph:
    return Graph.from_networkx(nx.complete_graph(4))


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def build_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> List[Graph]:
    """Connected graphs on 4..14 nodes, cycling through ER, BA and regular (d >= 3) families"""
    rng = np.random.default_rng(seed)
    graphs = []
    while len(graphs) < size:
        n = int(rng.integers(4, 15))
        kind = len(graphs) % 3
        graph_seed = int(rng.integers(2**32))
        if kind == 0:
            m = int(rng.integers(min(n + n // 2, comb(n, 2)), comb(n, 2) + 1))
            spec = GeneratorSpec(family=GraphFamily.ERDOS_RENYI, node_count=n, edge_count=m,
                                 seed=graph_seed, require_connected=True)
        elif kind == 1:
            attach = int(rng.integers(1, min(3, n - 2) + 1))
            spec = GeneratorSpec(family=GraphFamily.BARABASI_ALBERT, node_count=n, mean_degree=2 * attach,
                                 seed=graph_seed)
        else:
            degrees = [d for d in range(3, n) if (n * d) % 2 == 0]
            d = degrees[int(rng.integers(len(degrees)))]
            spec = GeneratorSpec(family=GraphFamily.REGULAR, node_count=n, mean_degree=d,
                                 seed=graph_seed, require_connected=True)
        g = generate(spec)
        if g.is_connected:
            graphs.append(g)
    return graphs


@pytest.fixture(scope="session")
def corpus() -> List[Graph]:
    return build_corpus()
