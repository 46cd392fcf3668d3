import logging
from pathlib import Path
from typing import Dict, Iterator, List, Tuple

from dyadbound.exceptions import EdgeListParseError, GraphValidationError, FileAccessError
from dyadbound.models.graph import Graph
from dyadbound.schemas.dyads import CharacteristicAssignment

logger = logging.getLogger(__name__)

CHARACTERISTIC_FORMATS = ("vector", "set")


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line_number, tokens) for every non-blank, non-comment line"""
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_number, line.split()


def parse_edge_list(text: str) -> Graph:
    """Parse a whitespace-separated edge list, relabeling nodes by first appearance"""
    index: Dict[str, int] = {}
    labels: List[str] = []
    edges: List[Tuple[int, int]] = []
    seen = set()

    for line_number, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected two node tokens, found {len(tokens)}", line_number)
        ids = []
        for token in tokens:
            if token not in index:
                index[token] = len(labels)
                labels.append(token)
            ids.append(index[token])
        u, v = ids
        if u == v:
            raise GraphValidationError(f"line {line_number}: self-loop on node '{tokens[0]}' (graph must be simple)")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphValidationError(
                f"line {line_number}: duplicate edge '{tokens[0]} {tokens[1]}' (graph must be simple)"
            )
        seen.add(key)
        edges.append((u, v))

    if not labels:
        raise EdgeListParseError("edge list contains no edges")

    graph = Graph(len(labels), edges, labels)
    logger.debug(f"Parsed edge list with N={graph.node_count}, M={graph.edge_count}")
    return graph


def read_edge_list(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        logger.error(f"Edge list {path} is not UTF-8 text: {e}")
        raise EdgeListParseError(f"{path} is not UTF-8 text: {e}")
    except OSError as e:
        logger.error(f"Could not read edge list {path}: {e}")
        raise FileAccessError(f"cannot read {path}: {e}")
    graph = parse_edge_list(text)
    logger.info(f"Loaded graph from {path}: N={graph.node_count}, M={graph.edge_count}")
    return graph


def write_edge_list(g: Graph) -> str:
    """One edge per line using the original labels, in sorted dense-id order"""
    lines = [f"# N={g.node_count} M={g.edge_count}"]
    lines.extend(f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_characteristic(text: str, g: Graph, fmt: str = "vector") -> CharacteristicAssignment:
    """Read a 0/1 vector (node order) or a set of 1-labeled node labels"""
    if fmt not in CHARACTERISTIC_FORMATS:
        raise GraphValidationError(f"unknown characteristic format '{fmt}'")

    if fmt == "vector":
        values = []
        for line_number, tokens in _content_lines(text):
            if len(tokens) != 1 or tokens[0] not in ("0", "1"):
                raise EdgeListParseError("expected a single 0 or 1", line_number)
            values.append(int(tokens[0]))
        if len(values) != g.node_count:
            raise GraphValidationError(f"characteristic has {len(values)} entries, graph has {g.node_count} nodes")
        return CharacteristicAssignment(labels=tuple(values))

    index = {label: i for i, label in enumerate(g.labels)}
    labels = [0] * g.node_count
    for line_number, tokens in _content_lines(text):
        if len(tokens) != 1:
            raise EdgeListParseError("expected a single node label", line_number)
        node = index.get(tokens[0])
        if node is None:
            raise GraphValidationError(f"line {line_number}: unknown node '{tokens[0]}'")
        if labels[node]:
            raise GraphValidationError(f"line {line_number}: node '{tokens[0]}' listed twice")
        labels[node] = 1
    return CharacteristicAssignment(labels=tuple(labels))


def read_characteristic(path: str, g: Graph, fmt: str = "vector") -> CharacteristicAssignment:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        logger.error(f"Characteristic file {path} is not UTF-8 text: {e}")
        raise EdgeListParseError(f"{path} is not UTF-8 text: {e}")
    except OSError as e:
        logger.error(f"Could not read characteristic file {path}: {e}")
        raise FileAccessError(f"cannot read {path}: {e}")
    return parse_characteristic(text, g, fmt)
