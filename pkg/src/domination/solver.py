"""
Weighted domination solver for trees and cacti.

Vertices are processed from the last DFN back to the root. By the time a
vertex is reached, every vertex hanging below it has already been folded into
its parameters, so each DFN interval of a hanging subcactus is resolved before
the cycle or tree edge that attaches it.
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional

from src.graph_core import ExtWeight, WeightedGraph
from src.dfs_cactus import DfsStructure
from src.domination.params import (DomParams, OpCounter, check_relations, combine_edge,
                                   init_params, merge_at_vertex)
from src.domination.subalgorithms import cycle_like
from src.domination.tracing import ChoiceTrace, Component, ExtractionError

logger = logging.getLogger(__name__)


class NotATreeError(ValueError):
    """solve_tree was given a graph with a cycle."""


@dataclass
class SolveResult:
    """Weighted domination number with the root parameters and operation counts."""
    gamma: ExtWeight
    root_params: DomParams
    counter: OpCounter
    dominating_set: Optional[FrozenSet[int]] = None
    trace: Optional[ChoiceTrace] = field(default=None, repr=False, compare=False)

    def to_text(self, block_count: int, include_set: bool = False) -> str:
        lines = [f"gamma={self.gamma}",
                 f"additions={self.counter.additions}",
                 f"min_ops={self.counter.min_ops}",
                 f"blocks={block_count}"]
        if include_set and self.dominating_set is not None:
            lines.append("set=" + " ".join(str(v) for v in sorted(self.dominating_set)))
        return "\n".join(lines) + "\n"


def _check_sizes(g: WeightedGraph, s: DfsStructure):
    if s.vertex_count != g.vertex_count:
        raise ValueError(f"DFS structure covers {s.vertex_count} vertices, graph has {g.vertex_count}")


def _sweep(g: WeightedGraph, s: DfsStructure, counter: OpCounter,
           trace: Optional[ChoiceTrace], verify_relations: bool) -> DomParams:
    """Fold every vertex into its father or its cycle root, last DFN first."""
    params: List[DomParams] = [init_params(g.weights[v], v, trace) for v in range(g.vertex_count)]
    cycle_bottom: Dict[int, int] = {}

    for v in reversed(s.order[1:]):
        if not s.on_cycle_path(v):
            father = s.father[v]
            params[father] = combine_edge(params[father], params[v], counter, trace)
            if verify_relations:
                check_relations(params[father], g.weights[father])
            continue

        top = s.orien[v]
        if top != v:
            # the first cycle vertex met from the back closes the cycle to its root
            cycle_bottom.setdefault(top, v)
            continue

        chain = [cycle_bottom.pop(v)]
        while chain[-1] != v:
            chain.append(s.father[chain[-1]])
        chain.reverse()

        r = s.root_of[v]
        bare_root = init_params(g.weights[r], r, trace)
        cycle_params = cycle_like([params[u] for u in chain], bare_root, counter, trace)
        params[r] = merge_at_vertex(params[r], cycle_params, g.weights[r], counter, trace)
        if verify_relations:
            check_relations(cycle_params, g.weights[r])
            check_relations(params[r], g.weights[r])

    return params[s.root]


def _finish(g: WeightedGraph, root_params: DomParams, counter: OpCounter,
            trace: Optional[ChoiceTrace], extract_set: bool) -> SolveResult:
    result = SolveResult(gamma=root_params.g, root_params=root_params, counter=counter, trace=trace)
    if extract_set:
        result.dominating_set = extract_dominating_set(g, result)
    return result


def solve_tree(g: WeightedGraph, s: DfsStructure, extract_set: bool = False) -> SolveResult:
    """
    Fold each child into its father by an edge join.

    Args:
        g (WeightedGraph): A tree
        s (DfsStructure): Structure built from g
        extract_set (bool): Also rebuild a minimum-weight dominating set

    Returns:
        SolveResult: gamma and root parameters after exactly 4(n-1) additions and 3(n-1) mins
    """
    _check_sizes(g, s)
    if g.edge_count != g.vertex_count - 1 or any(s.on_cycle_path(v) for v in s.order):
        raise NotATreeError(f"Graph with {g.vertex_count} vertices and {g.edge_count} edges is not a tree")

    counter = OpCounter()
    trace = ChoiceTrace() if extract_set else None
    params = [init_params(g.weights[v], v, trace) for v in range(g.vertex_count)]
    for v in reversed(s.order[1:]):
        father = s.father[v]
        params[father] = combine_edge(params[father], params[v], counter, trace)

    result = _finish(g, params[s.root], counter, trace, extract_set)
    logger.info(f"Solved tree with {g.vertex_count} vertices: gamma={result.gamma}, "
                f"additions={counter.additions}, min_ops={counter.min_ops}")
    return result


def solve_cactus(g: WeightedGraph, s: DfsStructure, extract_set: bool = False,
                 verify_relations: bool = False) -> SolveResult:
    """
    Weighted domination number of a connected cactus.

    Args:
        g (WeightedGraph): Connected cactus
        s (DfsStructure): Structure built from g; the DFS root may be any vertex
        extract_set (bool): Also rebuild a minimum-weight dominating set
        verify_relations (bool): Check g00 <= g0, g1 <= w + g00 and g = min(g1, g0)
            after every combination

    Returns:
        SolveResult: gamma, root parameters and operation counts
    """
    _check_sizes(g, s)
    counter = OpCounter()
    trace = ChoiceTrace() if extract_set else None
    root_params = _sweep(g, s, counter, trace, verify_relations)

    result = _finish(g, root_params, counter, trace, extract_set)
    logger.info(f"Solved cactus with {g.vertex_count} vertices from root {s.root}: "
                f"gamma={result.gamma}, additions={counter.additions}, min_ops={counter.min_ops}")
    return result


def extract_dominating_set(g: WeightedGraph, result: SolveResult) -> FrozenSet[int]:
    """
    Replay the recorded min choices from the root down.

    Args:
        g (WeightedGraph): The solved graph
        result (SolveResult): Result of a solve run with extract_set=True

    Returns:
        FrozenSet[int]: Dominating set of weight gamma
    """
    if result.trace is None:
        raise ExtractionError("solve was run without recording choices; pass extract_set=True")

    chosen = frozenset(result.trace.replay(result.root_params.origin, Component.G))
    weight = g.total_weight(chosen)
    if not g.dominates(chosen):
        logger.error(f"Extracted set {sorted(chosen)} does not dominate the graph")
        raise ExtractionError("extracted set does not dominate the graph")
    if not math.isclose(weight, float(result.gamma), rel_tol=1e-9, abs_tol=1e-12):
        logger.error(f"Extracted set weight {weight} differs from gamma {result.gamma}")
        raise ExtractionError(f"extracted set weighs {weight}, gamma is {result.gamma}")
    return chosen
