"""
Weighted-graph core: representation, text format, cactus validation and a seeded generator.
This module handles everything the solver needs to receive a problem instance.
"""

import io
import math
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple, Union

import networkx as nx
import numpy as np

logger = logging.getLogger(__name__)

SEED_MASK = (1 << 64) - 1

Edge = Tuple[int, int]


def format_weight(value: float) -> str:
    """Shortest round-trip decimal text; integral values drop the fractional part."""
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


class ParameterAlgebraError(ArithmeticError):
    """A domination-parameter identity was violated (e.g. infinity reached a subtraction)."""


@dataclass(frozen=True)
class ExtWeight:
    """Nonnegative finite weight or the +infinity sentinel, with saturating arithmetic."""
    value: float = 0.0
    infinite: bool = False

    def __post_init__(self):
        if self.infinite:
            if self.value != 0.0:
                raise ValueError("Infinity carries no finite value")
        elif not math.isfinite(self.value) or self.value < 0:
            raise ValueError(f"Finite weight must be nonnegative and finite, got {self.value!r}")

    @classmethod
    def finite(cls, value: float) -> "ExtWeight":
        return cls(float(value))

    @classmethod
    def infinity(cls) -> "ExtWeight":
        return cls(0.0, True)

    @classmethod
    def _unchecked(cls, value: float) -> "ExtWeight":
        # arithmetic results of valid finite weights skip __post_init__
        weight = object.__new__(cls)
        object.__setattr__(weight, "value", value)
        object.__setattr__(weight, "infinite", False)
        return weight

    def __add__(self, other: "ExtWeight") -> "ExtWeight":
        if self.infinite or other.infinite:
            return INFINITY
        total = self.value + other.value
        if total == math.inf:
            raise ParameterAlgebraError("finite weight sum overflowed")
        return ExtWeight._unchecked(total)

    def minus(self, weight: float) -> "ExtWeight":
        """Remove a vertex weight counted twice; undefined on infinity."""
        if self.infinite:
            raise ParameterAlgebraError("cannot subtract a vertex weight from infinity")
        # Rounding may leave a tiny negative residue for float weights.
        return ExtWeight._unchecked(max(self.value - weight, 0.0))

    def __lt__(self, other: "ExtWeight") -> bool:
        if self.infinite:
            return False
        return other.infinite or self.value < other.value

    def __le__(self, other: "ExtWeight") -> bool:
        if other.infinite:
            return True
        return not self.infinite and self.value <= other.value

    def __gt__(self, other: "ExtWeight") -> bool:
        return other < self

    def __ge__(self, other: "ExtWeight") -> bool:
        return other <= self

    def __float__(self) -> float:
        return math.inf if self.infinite else self.value

    def __str__(self) -> str:
        return "inf" if self.infinite else format_weight(self.value)


ZERO = ExtWeight(0.0)
INFINITY = ExtWeight(0.0, True)


class GraphParseError(ValueError):
    """Graph text could not be parsed; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class MalformedHeaderError(GraphParseError):
    pass


class WeightCountError(GraphParseError):
    pass


class NonPositiveWeightError(GraphParseError):
    pass


class MalformedEdgeError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class EdgeCountError(GraphParseError):
    pass


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected simple graph with positive vertex weights."""
    vertex_count: int
    weights: Tuple[float, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Edge, ...] = field(default=())

    @classmethod
    def from_edges(cls, weights: Sequence[float], edges: Iterable[Edge]) -> "WeightedGraph":
        """
        Build a graph; adjacency lists follow the order edges are given in.

        Args:
            weights (Sequence[float]): Vertex weights, indexed by vertex id
            edges (Iterable[Edge]): Undirected edges as (u, v) pairs

        Returns:
            WeightedGraph: The validated graph
        """
        n = len(weights)
        clean_weights = tuple(float(w) for w in weights)
        for vertex, weight in enumerate(clean_weights):
            if not math.isfinite(weight) or weight <= 0:
                raise ValueError(f"Vertex {vertex} has nonpositive or non-finite weight {weight!r}")

        adjacency: List[List[int]] = [[] for _ in range(n)]
        seen = set()
        edge_list = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"Self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"Duplicate edge ({u}, {v})")
            seen.add(key)
            edge_list.append((u, v))
            adjacency[u].append(v)
            adjacency[v].append(u)

        return cls(n, clean_weights, tuple(tuple(nbrs) for nbrs in adjacency), tuple(edge_list))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    def total_weight(self, vertices: Iterable[int]) -> float:
        return sum(self.weights[v] for v in set(vertices))

    def dominates(self, vertices: Iterable[int]) -> bool:
        """True when the closed neighbourhood of the set covers every vertex."""
        chosen = set(vertices)
        covered = set(chosen)
        for v in chosen:
            covered.update(self.adjacency[v])
        return len(covered) == self.vertex_count

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph


def _content_lines(stream: TextIO) -> Iterator[Tuple[int, str]]:
    """Yield (line number, stripped text), skipping comments and blank lines."""
    for number, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        yield number, text


def parse_graph(text: Union[str, TextIO]) -> WeightedGraph:
    """
    Parse the line-oriented graph text format.

    Args:
        text (str | TextIO): Graph text or an open text stream

    Returns:
        WeightedGraph: Graph with exactly the declared vertices, weights and edges
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    lines = _content_lines(stream)

    header = next(lines, None)
    if header is None:
        raise MalformedHeaderError(1, "missing '<n> <m>' header")
    line_number, content = header
    fields = content.split()
    try:
        n, m = (int(part) for part in fields)
    except ValueError:
        raise MalformedHeaderError(line_number, f"expected '<n> <m>', got {content!r}")
    if n < 1 or m < 0:
        raise MalformedHeaderError(line_number, f"need n >= 1 and m >= 0, got n={n}, m={m}")

    weight_line = next(lines, None)
    if weight_line is None:
        raise WeightCountError(line_number + 1, f"expected {n} weights, found none")
    line_number, content = weight_line
    tokens = content.split()
    if len(tokens) != n:
        raise WeightCountError(line_number, f"expected {n} weights, found {len(tokens)}")
    weights = []
    for token in tokens:
        try:
            weight = float(token)
        except ValueError:
            raise NonPositiveWeightError(line_number, f"weight {token!r} is not a decimal number")
        if not math.isfinite(weight) or weight <= 0:
            raise NonPositiveWeightError(line_number, f"weight {token!r} must be positive and finite")
        weights.append(weight)

    edges = []
    seen = set()
    for line_number, content in lines:
        if len(edges) == m:
            raise EdgeCountError(line_number, f"more than the declared {m} edges")
        parts = content.split()
        try:
            u, v = (int(part) for part in parts)
        except ValueError:
            raise MalformedEdgeError(line_number, f"expected '<u> <v>', got {content!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(line_number, f"edge ({u}, {v}) leaves vertex range 0..{n - 1}")
        if u == v:
            raise SelfLoopError(line_number, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(line_number, f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))

    if len(edges) != m:
        raise EdgeCountError(line_number + 1, f"declared {m} edges, found {len(edges)}")

    graph = WeightedGraph.from_edges(weights, edges)
    logger.info(f"Parsed graph with {graph.vertex_count} vertices and {graph.edge_count} edges")
    return graph


def serialize_graph(g: WeightedGraph) -> str:
    """Emit the graph text format; parse_graph(serialize_graph(g)) == g."""
    lines = [f"{g.vertex_count} {g.edge_count}",
             " ".join(format_weight(w) for w in g.weights)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CactusReport:
    """Verdict of validate_cactus."""
    is_cactus: bool
    is_connected: bool
    witness: Optional[Edge] = None


def validate_cactus(g: WeightedGraph) -> CactusReport:
    """
    Check that g is connected and every biconnected component is an edge or a simple cycle.

    Args:
        g (WeightedGraph): Graph to check

    Returns:
        CactusReport: Verdict, connectivity and a witness edge lying on two cycles
    """
    graph = g.to_networkx()
    connected = g.vertex_count > 0 and nx.is_connected(graph)

    witness = None
    for component in nx.biconnected_component_edges(graph):
        component = list(component)
        vertices = {x for edge in component for x in edge}
        if len(component) > 1 and len(component) != len(vertices):
            u, v = component[0]
            witness = (min(u, v), max(u, v))
            break

    report = CactusReport(is_cactus=connected and witness is None,
                          is_connected=connected,
                          witness=witness)
    logger.debug(f"Cactus validation: {report}")
    return report


def check_generator_arguments(cycle_fraction: float,
                              max_cycle_len: int,
                              weight_range: Tuple[float, float],
                              integer_weights: bool = False) -> None:
    """Raise ValueError for generator settings no seed can satisfy."""
    low, high = weight_range
    if not 0.0 <= cycle_fraction <= 1.0:
        raise ValueError(f"cycle_fraction must lie in [0, 1], got {cycle_fraction}")
    if max_cycle_len < 3:
        raise ValueError(f"max_cycle_len must be at least 3, got {max_cycle_len}")
    if not 0 < low <= high:
        raise ValueError(f"weight_range must satisfy 0 < low <= high, got {weight_range}")
    if integer_weights and math.ceil(low) > math.floor(high):
        raise ValueError(f"weight_range {weight_range} contains no integer")


def generate_random_cactus(seed: int,
                           n_target: int,
                           cycle_fraction: float,
                           max_cycle_len: int,
                           weight_range: Tuple[float, float],
                           integer_weights: bool = False) -> WeightedGraph:
    """
    Grow a connected cactus by attaching pendant edges or cycles at random vertices.

    Args:
        seed (int): Seed; the same arguments always give the same graph
        n_target (int): Minimum vertex count
        cycle_fraction (float): Probability that a growth step attaches a cycle
        max_cycle_len (int): Longest attached cycle (at least 3)
        weight_range (Tuple[float, float]): Inclusive bounds for vertex weights
        integer_weights (bool): Draw integer weights instead of uniform reals

    Returns:
        WeightedGraph: Cactus with between n_target and n_target + max_cycle_len vertices
    """
    if n_target < 1:
        raise ValueError(f"n_target must be positive, got {n_target}")
    check_generator_arguments(cycle_fraction, max_cycle_len, weight_range, integer_weights)
    low, high = weight_range

    rng = np.random.default_rng(seed & SEED_MASK)
    edges: List[Edge] = []
    count = 1
    while count < n_target:
        anchor = int(rng.integers(count))
        if rng.random() < cycle_fraction:
            length = int(rng.integers(3, max_cycle_len + 1))
            ring = [anchor] + list(range(count, count + length - 1)) + [anchor]
            edges.extend(zip(ring, ring[1:]))
            count += length - 1
        else:
            edges.append((anchor, count))
            count += 1

    if integer_weights:
        weights = rng.integers(math.ceil(low), math.floor(high) + 1, size=count).astype(float)
    else:
        weights = rng.uniform(low, high, size=count)

    graph = WeightedGraph.from_edges(weights.tolist(), edges)
    logger.debug(f"Generated cactus seed={seed} with {graph.vertex_count} vertices, "
                 f"{graph.edge_count} edges")
    return graph
