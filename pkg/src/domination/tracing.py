"""
Choice tracing for dominating-set extraction.

Each parameter combination the solver performs becomes a node holding its
operand nodes and the branch every min took. Replaying from the root node
top-down, following the recorded branches, yields a set whose weight is the
requested parameter.
"""

import logging
from enum import IntEnum
from typing import List, Optional, Set, Tuple

logger = logging.getLogger(__name__)


class ExtractionError(RuntimeError):
    """A dominating set could not be rebuilt from the recorded choices."""


class NodeKind(IntEnum):
    LEAF = 0
    EDGE = 1
    MERGE = 2
    FORCED_FIRST = 3
    CYCLE = 4


class Component(IntEnum):
    G00 = 0
    G1 = 1
    G0 = 2
    G = 3


class ChoiceTrace:
    """Append-only record of parameter combinations."""

    def __init__(self):
        self._kinds: List[NodeKind] = []
        self._operands: List[Tuple[Optional[int], ...]] = []
        self._branches: List[Tuple[int, ...]] = []

    def __len__(self) -> int:
        return len(self._kinds)

    def leaf(self, vertex: int) -> int:
        return self.record(NodeKind.LEAF, (vertex,), ())

    def record(self, kind: NodeKind, operands: Tuple[Optional[int], ...],
               branches: Tuple[int, ...]) -> int:
        self._kinds.append(kind)
        self._operands.append(operands)
        self._branches.append(branches)
        return len(self._kinds) - 1

    def replay(self, node: Optional[int], component: Component = Component.G) -> Set[int]:
        """
        Rebuild the vertex set realising one component of a recorded node.

        Args:
            node (int): Node id from DomParams.origin
            component (Component): Which parameter to realise

        Returns:
            Set[int]: Vertices of a set attaining that parameter
        """
        chosen: Set[int] = set()
        pending = [(node, component)]
        while pending:
            node, component = pending.pop()
            if node is None:
                raise ExtractionError("parameters were combined without a trace")
            kind = self._kinds[node]
            operands = self._operands[node]
            branches = self._branches[node]

            if component == Component.G and kind != NodeKind.LEAF:
                picked = Component.G1 if branches[-1] == 0 else Component.G0
                pending.append((node, picked))
                continue

            if kind == NodeKind.LEAF:
                if component == Component.G0:
                    raise ExtractionError(f"vertex {operands[0]} has no dominating set avoiding it")
                if component != Component.G00:
                    chosen.add(operands[0])

            elif kind == NodeKind.EDGE:
                parent, child = operands
                pick_g1, pick_g0, _ = branches
                if component == Component.G00:
                    pending += [(parent, Component.G00), (child, Component.G)]
                elif component == Component.G1:
                    child_part = Component.G1 if pick_g1 == 0 else Component.G00
                    pending += [(parent, Component.G1), (child, child_part)]
                elif pick_g0 == 0:
                    pending += [(parent, Component.G0), (child, Component.G)]
                else:
                    pending += [(parent, Component.G00), (child, Component.G1)]

            elif kind == NodeKind.MERGE:
                first, second = operands
                pick_g0, _ = branches
                if component == Component.G00:
                    pending += [(first, Component.G00), (second, Component.G00)]
                elif component == Component.G1:
                    pending += [(first, Component.G1), (second, Component.G1)]
                elif pick_g0 == 0:
                    pending += [(first, Component.G0), (second, Component.G00)]
                else:
                    pending += [(first, Component.G00), (second, Component.G0)]

            elif kind == NodeKind.FORCED_FIRST:
                forced, following = operands
                following_part = Component.G1 if component == Component.G1 else Component.G00
                pending += [(forced, Component.G1), (following, following_part)]

            else:
                path, closed, far_forced = operands
                pick_g0, _ = branches
                if component == Component.G00:
                    pending.append((path, Component.G))
                elif component == Component.G1:
                    pending.append((closed, Component.G1))
                elif pick_g0 == 0:
                    pending.append((path, Component.G1))
                else:
                    pending.append((far_forced, Component.G))

        logger.debug(f"Replayed {len(chosen)} vertices from trace of {len(self)} nodes")
        return chosen
