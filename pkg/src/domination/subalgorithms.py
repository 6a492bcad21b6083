"""
Folds over path-like and cycle-like cacti.

A chain lists the parameters of rooted graphs hung on consecutive path
vertices. Every fold returns parameters rooted at the chain's last element.
"""

import logging
from typing import List, Optional, Sequence

from src.domination.params import DomParams, OpCounter, combine_edge
from src.domination.tracing import ChoiceTrace, NodeKind

logger = logging.getLogger(__name__)


def path_like_fold(chain: Sequence[DomParams], counter: OpCounter,
                   trace: Optional[ChoiceTrace] = None) -> DomParams:
    """
    Join the chain's roots by path edges.

    Args:
        chain (Sequence[DomParams]): Parameters of the hung graphs, in path order
        counter (OpCounter): Receives 4(k-1) additions and 3(k-1) mins
        trace (ChoiceTrace, optional): Records each edge join

    Returns:
        DomParams: Parameters of the path-like cactus rooted at the last vertex
    """
    if not chain:
        raise ValueError("path_like_fold needs at least one element")
    acc = chain[0]
    for params in chain[1:]:
        acc = combine_edge(params, acc, counter, trace)
    return acc


def d_closed_first_step(forced: DomParams, following: DomParams, counter: OpCounter,
                        trace: Optional[ChoiceTrace] = None) -> DomParams:
    """Join `following` to a root that must be in the set; the result is rooted at `following`."""
    g00 = counter.add(following.g00, forced.g1)
    g1 = counter.add(following.g1, forced.g1)
    g0 = counter.add(following.g00, forced.g1)
    g, pick_g = counter.least(g1, g0)

    origin = None
    if trace is not None:
        origin = trace.record(NodeKind.FORCED_FIRST, (forced.origin, following.origin), (pick_g,))
    return DomParams(g00, g1, g0, g, origin)


def d_closed_path_like_fold(chain: Sequence[DomParams], counter: OpCounter,
                            trace: Optional[ChoiceTrace] = None) -> DomParams:
    """
    Path-like fold in which the first root belongs to every set considered.

    The g1 of the result is the lightest set containing both endpoints.
    """
    if len(chain) < 2:
        raise ValueError(f"d_closed_path_like_fold needs at least two elements, got {len(chain)}")
    acc = d_closed_first_step(chain[0], chain[1], counter, trace)
    for params in chain[2:]:
        acc = combine_edge(params, acc, counter, trace)
    return acc


def cycle_like(cycle_chain: Sequence[DomParams], root_params: DomParams, counter: OpCounter,
               trace: Optional[ChoiceTrace] = None) -> DomParams:
    """
    Parameters of a cycle-like cactus at its cycle root r.

    Args:
        cycle_chain (Sequence[DomParams]): Non-root cycle vertices from the
            son of r that opened the cycle to the vertex closing it back to r
        root_params (DomParams): Parameters of r alone; its g1 is w(r)
        counter (OpCounter): Receives 12k-5 additions and 9k-5 mins for k chain vertices
        trace (ChoiceTrace, optional): Records the three passes and the final mins

    Returns:
        DomParams: (g00, g1, g0, g) of the cycle-like cactus rooted at r
    """
    if len(cycle_chain) < 2:
        raise ValueError(f"a cycle needs at least 3 vertices, got {len(cycle_chain) + 1}")
    toward: List[DomParams] = list(reversed(cycle_chain))

    # r left out: the rest only has to dominate itself
    path = path_like_fold(toward, counter, trace)
    # r in the set: a copy of r forced at the far end, r again as the result root
    closed = d_closed_path_like_fold([root_params] + toward + [root_params], counter, trace)
    # r out of the set but dominated through the closing vertex
    far = d_closed_path_like_fold(toward, counter, trace)

    g00 = path.g
    g1 = counter.subtract(closed.g1, root_params.g1)
    g0, pick_g0 = counter.least(path.g1, far.g)
    g, pick_g = counter.least(g1, g0)

    origin = None
    if trace is not None:
        origin = trace.record(NodeKind.CYCLE, (path.origin, closed.origin, far.origin),
                              (pick_g0, pick_g))
    logger.debug(f"Cycle of {len(cycle_chain) + 1} vertices folded to ({g00}, {g1}, {g0}, {g})")
    return DomParams(g00, g1, g0, g, origin)
