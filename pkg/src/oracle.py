"""
Exact weighted domination by subset enumeration, for graphs small enough to enumerate.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional

import numpy as np

from src.graph_core import INFINITY, ZERO, ExtWeight, WeightedGraph
from src.domination.params import DomParams
from config.solver_config import solver_config

logger = logging.getLogger(__name__)


class OracleLimitError(ValueError):
    """Too many vertices left to enumerate."""


class OracleConstraintError(ValueError):
    """Membership constraints overlap."""


@dataclass(frozen=True)
class OracleResult:
    gamma: ExtWeight
    witness: Optional[FrozenSet[int]]
    evaluated_subsets: int

    def to_text(self) -> str:
        lines = [f"gamma={self.gamma}"]
        if self.witness is not None:
            lines.append("set=" + " ".join(str(v) for v in sorted(self.witness)))
        return "\n".join(lines) + "\n"


def _vertex_set(g: WeightedGraph, vertices: Iterable[int], label: str) -> FrozenSet[int]:
    chosen = frozenset(int(v) for v in vertices)
    for v in chosen:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"{label} vertex {v} outside vertex range 0..{g.vertex_count - 1}")
    return chosen


def brute_force_gamma(g: WeightedGraph,
                      must_include: Iterable[int] = (),
                      must_exclude: Iterable[int] = (),
                      deleted: Iterable[int] = (),
                      max_vertices: Optional[int] = None) -> OracleResult:
    """
    Lightest set dominating G - deleted that contains must_include and avoids must_exclude.

    Args:
        g (WeightedGraph): Graph to enumerate
        must_include (Iterable[int]): Vertices every candidate contains
        must_exclude (Iterable[int]): Vertices no candidate contains
        deleted (Iterable[int]): Vertices removed from the graph first
        max_vertices (int, optional): Enumeration cap; defaults to the configured one

    Returns:
        OracleResult: gamma (inf if no candidate dominates), a witness and the subset count
    """
    include = _vertex_set(g, must_include, "must_include")
    exclude = _vertex_set(g, must_exclude, "must_exclude")
    removed = _vertex_set(g, deleted, "deleted")
    for left, right, names in ((include, exclude, "must_include and must_exclude"),
                               (include, removed, "must_include and deleted"),
                               (exclude, removed, "must_exclude and deleted")):
        if left & right:
            raise OracleConstraintError(f"{names} share vertices {sorted(left & right)}")

    kept = [v for v in range(g.vertex_count) if v not in removed]
    limit = max_vertices if max_vertices is not None else solver_config.oracle_max_vertices
    if len(kept) > limit:
        raise OracleLimitError(f"{len(kept)} vertices exceed the oracle limit of {limit}")
    if not kept:
        return OracleResult(ZERO, frozenset(), 1)

    position = {v: i for i, v in enumerate(kept)}
    masks = {}
    for v in kept:
        mask = 1 << position[v]
        for u in g.adjacency[v]:
            if u in position:
                mask |= 1 << position[u]
        masks[v] = mask
    target = (1 << len(kept)) - 1

    base_mask = 0
    for v in include:
        base_mask |= masks[v]
    free = [v for v in kept if v not in include and v not in exclude]

    dominated = np.array([base_mask], dtype=np.int64)
    weights = np.array([sum(g.weights[v] for v in include)], dtype=float)
    for v in free:
        # bit j of a subset index says whether free[j] is chosen
        dominated = np.concatenate((dominated, dominated | masks[v]))
        weights = np.concatenate((weights, weights + g.weights[v]))

    feasible = np.flatnonzero((dominated & target) == target)
    evaluated = int(dominated.size)
    if feasible.size == 0:
        logger.debug(f"No dominating set among {evaluated} subsets")
        return OracleResult(INFINITY, None, evaluated)

    best = int(feasible[np.argmin(weights[feasible])])
    witness = include | {v for j, v in enumerate(free) if best >> j & 1}
    result = OracleResult(ExtWeight.finite(float(weights[best])), frozenset(witness), evaluated)
    logger.debug(f"Oracle gamma={result.gamma} after {evaluated} subsets")
    return result


def brute_force_params(g: WeightedGraph, v: int, max_vertices: Optional[int] = None) -> DomParams:
    """(g00, g1, g0, g) at v from four constrained enumerations."""
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"Vertex {v} outside vertex range 0..{g.vertex_count - 1}")
    g00 = brute_force_gamma(g, deleted=[v], max_vertices=max_vertices).gamma
    g1 = brute_force_gamma(g, must_include=[v], max_vertices=max_vertices).gamma
    g0 = brute_force_gamma(g, must_exclude=[v], max_vertices=max_vertices).gamma
    gamma = brute_force_gamma(g, max_vertices=max_vertices).gamma
    return DomParams(g00, g1, g0, gamma)
