"""
Domination parameter algebra: the (g00, g1, g0, g) four-tuple, edge joins and vertex merges.
Every ExtWeight addition and binary min goes through an OpCounter.
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from src.graph_core import ExtWeight, INFINITY, ZERO, ParameterAlgebraError
from src.domination.tracing import ChoiceTrace, NodeKind

logger = logging.getLogger(__name__)


@dataclass
class OpCounter:
    """Tallies of ExtWeight additions and binary min operations."""
    additions: int = 0
    min_ops: int = 0

    def add(self, left: ExtWeight, right: ExtWeight) -> ExtWeight:
        self.additions += 1
        return left + right

    def subtract(self, value: ExtWeight, amount: ExtWeight) -> ExtWeight:
        """Subtraction counts as one addition."""
        self.additions += 1
        if amount.infinite:
            raise ParameterAlgebraError("cannot subtract infinity")
        return value.minus(amount.value)

    def least(self, first: ExtWeight, second: ExtWeight) -> Tuple[ExtWeight, int]:
        """Binary min; returns the winner and 0 when the first operand wins (ties included)."""
        self.min_ops += 1
        if first <= second:
            return first, 0
        return second, 1

    def as_tuple(self) -> Tuple[int, int]:
        return self.additions, self.min_ops


@dataclass(frozen=True)
class DomParams:
    """
    Weighted domination parameters of a rooted graph (G, v).

    g00: min weight dominating G - v
    g1:  min weight dominating set containing v
    g0:  min weight dominating set avoiding v
    g:   min(g1, g0)
    """
    g00: ExtWeight
    g1: ExtWeight
    g0: ExtWeight
    g: ExtWeight
    origin: Optional[int] = field(default=None, compare=False)

    def as_tuple(self) -> Tuple[ExtWeight, ExtWeight, ExtWeight, ExtWeight]:
        return self.g00, self.g1, self.g0, self.g

    def satisfies_relations(self, root_weight: float, rel_tol: float = 1e-9) -> bool:
        """g00 <= g0, g1 <= w(root) + g00 and g = min(g1, g0), up to rounding."""
        def at_most(left: ExtWeight, right: ExtWeight) -> bool:
            return left <= right or math.isclose(float(left), float(right), rel_tol=rel_tol)

        return (at_most(self.g00, self.g0)
                and at_most(self.g1, ExtWeight.finite(root_weight) + self.g00)
                and self.g == min(self.g1, self.g0))

    def __str__(self) -> str:
        return f"({self.g00}, {self.g1}, {self.g0}, {self.g})"


def init_params(w: float, vertex: Optional[int] = None,
                trace: Optional[ChoiceTrace] = None) -> DomParams:
    """
    Parameters of a single vertex: (0, w, inf, w).

    Args:
        w (float): Positive vertex weight
        vertex (int, optional): Vertex id, needed only when tracing choices
        trace (ChoiceTrace, optional): Trace that records the new leaf

    Returns:
        DomParams: Initial parameters
    """
    if not w > 0 or not math.isfinite(w):
        raise ValueError(f"Vertex weight must be positive and finite, got {w!r}")
    origin = None
    if trace is not None:
        if vertex is None:
            raise ValueError("Tracing a leaf needs its vertex id")
        origin = trace.leaf(vertex)
    weight = ExtWeight.finite(w)
    return DomParams(ZERO, weight, INFINITY, weight, origin)


def combine_edge(parent: DomParams, child: DomParams, counter: OpCounter,
                 trace: Optional[ChoiceTrace] = None) -> DomParams:
    """
    Join two rooted graphs by an edge between their roots; the result is rooted at parent's root.
    Costs 4 additions and 3 min operations.
    """
    g00 = counter.add(parent.g00, child.g)
    child_part, pick_g1 = counter.least(child.g1, child.g00)
    g1 = counter.add(parent.g1, child_part)
    g0, pick_g0 = counter.least(counter.add(parent.g0, child.g),
                                counter.add(parent.g00, child.g1))
    g, pick_g = counter.least(g1, g0)

    origin = None
    if trace is not None:
        origin = trace.record(NodeKind.EDGE, (parent.origin, child.origin),
                              (pick_g1, pick_g0, pick_g))
    return DomParams(g00, g1, g0, g, origin)


def merge_at_vertex(p1: DomParams, p2: DomParams, w0: float, counter: OpCounter,
                    trace: Optional[ChoiceTrace] = None) -> DomParams:
    """
    Union of two rooted graphs sharing only their root (weight w0).
    Costs 5 additions (one of them the subtraction of w0) and 2 min operations.
    """
    if not w0 > 0:
        raise ValueError(f"Shared vertex weight must be positive, got {w0!r}")
    g00 = counter.add(p1.g00, p2.g00)
    g1 = counter.subtract(counter.add(p1.g1, p2.g1), ExtWeight.finite(w0))
    g0, pick_g0 = counter.least(counter.add(p1.g0, p2.g00),
                                counter.add(p1.g00, p2.g0))
    g, pick_g = counter.least(g1, g0)

    origin = None
    if trace is not None:
        origin = trace.record(NodeKind.MERGE, (p1.origin, p2.origin), (pick_g0, pick_g))
    return DomParams(g00, g1, g0, g, origin)


def check_relations(params: DomParams, root_weight: float) -> DomParams:
    """Raise ParameterAlgebraError unless the parameter relations hold."""
    if not params.satisfies_relations(root_weight):
        logger.error(f"Parameter relations violated by {params} at root weight {root_weight}")
        raise ParameterAlgebraError(f"parameters {params} violate g00<=g0, g1<=w+g00 or g=min(g1,g0)")
    return params
