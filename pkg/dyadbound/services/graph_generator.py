import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

import networkx as nx
import numpy as np

from dyadbound.config import get_settings
from dyadbound.exceptions import GenerationError, GeneratorConfigError
from dyadbound.models.graph import Graph
from dyadbound.schemas.graph import GeneratorSpec, GraphFamily

logger = logging.getLogger(__name__)

Builder = Callable[[int], nx.Graph]


def _half_up(value: Fraction) -> int:
    return math.floor(value + Fraction(1, 2))


def _attempt_seed(seed: int, attempt: int) -> int:
    """Sub-seed for a connectivity retry; attempt 0 uses the spec seed itself"""
    if attempt == 0:
        return seed
    sequence = np.random.SeedSequence(seed, spawn_key=(attempt,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def resolve_edge_count(spec: GeneratorSpec) -> int:
    """Target M for the Erdős–Rényi and regular families"""
    n = spec.node_count
    if spec.edge_count is not None:
        return spec.edge_count
    if spec.mean_degree is not None:
        return _half_up(n * spec.mean_degree_fraction / 2)
    return _half_up(spec.density_fraction * n * (n - 1) / 2)


def resolve_regular_degree(spec: GeneratorSpec) -> int:
    n = spec.node_count
    if spec.density is not None:
        degree = _half_up(spec.density_fraction * (n - 1))
        if (n * degree) % 2:
            degree -= 1
        return degree

    if spec.mean_degree is not None:
        target = spec.mean_degree_fraction
    else:
        target = Fraction(2 * spec.edge_count, n)
    if target.denominator != 1:
        raise GeneratorConfigError(f"regular graphs need an integer degree, got {float(target)}")
    degree = int(target)
    if (n * degree) % 2:
        raise GeneratorConfigError(f"regular graph needs N*d even, got N={n}, d={degree}")
    return degree


def resolve_attachment(spec: GeneratorSpec) -> int:
    """Edges added per arriving node in the Barabási–Albert model"""
    n = spec.node_count
    if spec.mean_degree is not None:
        mean_degree = spec.mean_degree_fraction
    elif spec.density is not None:
        mean_degree = spec.density_fraction * (n - 1)
    else:
        mean_degree = Fraction(2 * spec.edge_count, n)
    m = _half_up(mean_degree / 2)
    if not 1 <= m < n:
        raise GeneratorConfigError(f"Barabási–Albert needs 1 <= m < N, got m={m}, N={n}")
    return m


def _erdos_renyi(n: int, m: int) -> Builder:
    max_edges = n * (n - 1) // 2

    def build(seed: int) -> nx.Graph:
        if m > max_edges // 2:
            return nx.dense_gnm_random_graph(n, m, seed=seed)
        return nx.gnm_random_graph(n, m, seed=seed)

    return build


def _barabasi_albert(n: int, m: int) -> Builder:
    def build(seed: int) -> nx.Graph:
        return nx.barabasi_albert_graph(n, m, seed=seed)

    return build


def _regular(n: int, d: int, max_rounds: int) -> Builder:
    def build(seed: int) -> nx.Graph:
        if 2 * d > n - 1:
            # pair stubs for the sparser complement
            return nx.complement(random_regular_graph(n, n - 1 - d, seed, max_rounds))
        return random_regular_graph(n, d, seed, max_rounds)

    return build


def random_regular_graph(n: int, d: int, seed: int, max_rounds: int = 100) -> nx.Graph:
    """d-regular graph by stub pairing, repairing loops and multi-edges with edge swaps"""
    rng = np.random.default_rng(seed)
    graph = nx.empty_graph(n)
    if d == 0:
        return graph

    for round_number in range(max_rounds):
        stubs = rng.permutation(np.repeat(np.arange(n), d))
        edge_list: List[Tuple[int, int]] = []
        position: Dict[Tuple[int, int], int] = {}
        defects = []
        for u, v in stubs.reshape(-1, 2).tolist():
            key = (u, v) if u < v else (v, u)
            if u == v or key in position:
                defects.append((u, v))
            else:
                position[key] = len(edge_list)
                edge_list.append(key)

        if all(_swap_in(a, b, edge_list, position, rng, max_rounds) for a, b in defects):
            graph.add_edges_from(edge_list)
            logger.debug(f"Regular graph n={n} d={d} built in round {round_number} with {len(defects)} repairs")
            return graph
        logger.debug(f"Regular pairing round {round_number} could not be repaired; re-pairing")

    raise GenerationError(f"could not build a {d}-regular graph on {n} nodes", seed=seed)


def _swap_in(a: int, b: int, edge_list: List[Tuple[int, int]], position: Dict[Tuple[int, int], int],
             rng: np.random.Generator, tries: int) -> bool:
    """Replace a random edge (c, e) by (a, c) and (b, e), absorbing the defective pair (a, b)"""
    if not edge_list:
        return False
    for _ in range(tries):
        c, e = edge_list[int(rng.integers(len(edge_list)))]
        if rng.integers(2):
            c, e = e, c
        if a == c or b == e:
            continue
        first = (a, c) if a < c else (c, a)
        second = (b, e) if b < e else (e, b)
        if first == second or first in position or second in position:
            continue

        removed = (c, e) if c < e else (e, c)
        slot = position.pop(removed)
        last = edge_list.pop()
        if last != removed:
            edge_list[slot] = last
            position[last] = slot
        for key in (first, second):
            position[key] = len(edge_list)
            edge_list.append(key)
        return True
    return False


def _plan(spec: GeneratorSpec) -> Builder:
    """Validate the spec and return a seed -> networkx graph builder"""
    settings = get_settings()
    n = spec.node_count
    max_edges = n * (n - 1) // 2

    if spec.family == GraphFamily.BARABASI_ALBERT:
        return _barabasi_albert(n, resolve_attachment(spec))

    if spec.family == GraphFamily.REGULAR:
        degree = resolve_regular_degree(spec)
        if degree > n - 1:
            raise GeneratorConfigError(f"degree {degree} exceeds N-1={n - 1}")
        edge_count = n * degree // 2
        builder = _regular(n, degree, settings.regular_max_repair_rounds)
    else:
        edge_count = resolve_edge_count(spec)
        builder = _erdos_renyi(n, edge_count)

    if edge_count > max_edges:
        raise GeneratorConfigError(f"M={edge_count} exceeds C(N,2)={max_edges}")
    if spec.require_connected and edge_count < n - 1:
        raise GeneratorConfigError(f"a connected graph on {n} nodes needs at least {n - 1} edges, got {edge_count}")
    return builder


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by spec; deterministic for a fixed seed"""
    settings = get_settings()
    builder = _plan(spec)
    retry = spec.require_connected and spec.family != GraphFamily.BARABASI_ALBERT
    attempts = settings.generator_max_retries if retry else 1

    for attempt in range(attempts):
        graph = Graph.from_networkx(builder(_attempt_seed(spec.seed, attempt)))
        if not spec.require_connected or graph.is_connected:
            if attempt:
                logger.warning(f"{spec.family.value} seed={spec.seed} needed {attempt + 1} attempts to be connected")
            logger.info(f"Generated {spec.family.value} graph: N={graph.node_count}, M={graph.edge_count}, seed={spec.seed}")
            return graph
        logger.debug(f"{spec.family.value} seed={spec.seed} attempt {attempt} disconnected; regenerating")

    raise GenerationError(f"no connected {spec.family.value} graph after {attempts} attempts", seed=spec.seed)
