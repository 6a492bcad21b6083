"""
DFS cactus data structure: FATHER, ROOT, ORIEN, IND and DFN arrays, vertex classes and blocks.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import networkx as nx

from src.graph_core import WeightedGraph

logger = logging.getLogger(__name__)


class NotACactusError(ValueError):
    """An edge lies on two cycles."""


class DisconnectedGraphError(ValueError):
    """The DFS from the root did not reach every vertex."""


@dataclass(frozen=True)
class DfsStructure:
    """Arrays recorded by the extended depth-first search, indexed by vertex id."""
    root: int
    dfn: Tuple[int, ...]
    order: Tuple[int, ...]
    father: Tuple[int, ...]
    root_of: Tuple[int, ...]
    orien: Tuple[int, ...]
    ind: Tuple[int, ...]
    traversal_steps: int = 0

    @property
    def vertex_count(self) -> int:
        return len(self.order)

    def on_cycle_path(self, v: int) -> bool:
        """v is a non-root vertex of some cycle."""
        return self.root_of[v] != v


class VertexClass(str, Enum):
    C = "C"
    G = "G"
    H = "H"


def build_dfs_structure(g: WeightedGraph, root: int = 0) -> DfsStructure:
    """
    Run the extended DFS from root, visiting neighbours in adjacency-list order.

    Args:
        g (WeightedGraph): Connected cactus
        root (int): DFS root

    Returns:
        DfsStructure: The DFS cactus data structure
    """
    n = g.vertex_count
    if not 0 <= root < n:
        raise ValueError(f"Root {root} outside vertex range 0..{n - 1}")

    dfn = [-1] * n
    father = list(range(n))
    root_of = list(range(n))
    orien = list(range(n))
    ind = [0] * n
    order = [root]
    dfn[root] = 0
    next_edge = [0] * n
    steps = 0

    stack = [root]
    while stack:
        v = stack[-1]
        neighbors = g.adjacency[v]
        if next_edge[v] == len(neighbors):
            # v is completely scanned
            stack.pop()
            steps += 1
            continue
        w = neighbors[next_edge[v]]
        next_edge[v] += 1
        steps += 1

        if dfn[w] < 0:
            dfn[w] = len(order)
            order.append(w)
            father[w] = v
            ind[v] += 1
            stack.append(w)
        elif w != father[v] and dfn[w] < dfn[v]:
            # back edge (v, w) closes a cycle rooted at w
            top = v
            u = v
            while u != w:
                if root_of[u] != u:
                    raise NotACactusError(
                        f"Edge ({father[u]}, {u}) lies on two cycles (closed at {root_of[u]} and {w})")
                root_of[u] = w
                top = u
                u = father[u]
                steps += 1
            u = v
            while u != w:
                orien[u] = top
                u = father[u]
                steps += 1

    if len(order) < n:
        missing = next(v for v in range(n) if dfn[v] < 0)
        raise DisconnectedGraphError(f"Vertex {missing} is not reachable from root {root}")

    structure = DfsStructure(root=root, dfn=tuple(dfn), order=tuple(order), father=tuple(father),
                             root_of=tuple(root_of), orien=tuple(orien), ind=tuple(ind),
                             traversal_steps=steps)
    logger.debug(f"Built DFS structure for {n} vertices from root {root} in {steps} steps")
    return structure


def _sons(s: DfsStructure, g: WeightedGraph, v: int) -> List[int]:
    return [u for u in g.adjacency[v] if s.father[u] == v and u != v]


def classify_vertex(s: DfsStructure, g: WeightedGraph, v: int) -> VertexClass:
    """
    Classify v as C, G or H from the DFS arrays alone.

    A vertex on a cycle path is C exactly when its only possible son is its
    successor on the same cycle; this also covers the last vertex of the path,
    which has no sons at all.
    """
    if not 0 <= v < s.vertex_count:
        raise ValueError(f"Vertex {v} outside vertex range 0..{s.vertex_count - 1}")
    sons = _sons(s, g, v)

    if v == s.root:
        roots_a_cycle = any(s.root_of[u] == v for u in sons)
        if not roots_a_cycle:
            return VertexClass.G
        return VertexClass.C if s.ind[v] == 1 else VertexClass.H

    if s.on_cycle_path(v):
        other_sons = [u for u in sons if s.root_of[u] != s.root_of[v]]
        if not other_sons:
            return VertexClass.C
        return VertexClass.H

    if any(s.root_of[u] == v for u in sons):
        return VertexClass.H
    return VertexClass.G


def definitional_vertex_class(g: WeightedGraph, v: int, on_cycle: bool) -> VertexClass:
    """Classification straight from the definitions: cycle membership and degree."""
    if not on_cycle:
        return VertexClass.G
    return VertexClass.C if g.degree(v) == 2 else VertexClass.H


@dataclass(frozen=True)
class Block:
    """A cycle (vertices in cycle order from its root) or a graft (vertex set)."""
    kind: str
    vertices: Tuple[int, ...]

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[Block, ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def cycles(self) -> List[Block]:
        return [block for block in self.blocks if block.is_cycle]

    @property
    def grafts(self) -> List[Block]:
        return [block for block in self.blocks if not block.is_cycle]


def block_decomposition(s: DfsStructure, g: WeightedGraph) -> BlockDecomposition:
    """
    Split the cactus into cycles (read off ROOT/ORIEN) and grafts (components of bridge edges).

    Args:
        s (DfsStructure): Structure built from g
        g (WeightedGraph): The cactus

    Returns:
        BlockDecomposition: Blocks partitioning the edge set
    """
    cycle_paths: Dict[int, List[int]] = {}
    for v in s.order:
        if s.on_cycle_path(v):
            cycle_paths.setdefault(s.orien[v], []).append(v)

    blocks = [Block("cycle", (s.root_of[top],) + tuple(path))
              for top, path in cycle_paths.items()]

    bridges = nx.Graph()
    bridges.add_edges_from((v, s.father[v]) for v in s.order[1:] if not s.on_cycle_path(v))
    if s.vertex_count == 1:
        bridges.add_node(s.root)

    grafts = sorted((sorted(component, key=s.dfn.__getitem__)
                     for component in nx.connected_components(bridges)),
                    key=lambda members: s.dfn[members[0]])

    blocks.extend(Block("graft", tuple(members)) for members in grafts)
    logger.debug(f"Block decomposition: {len(cycle_paths)} cycles, {len(grafts)} grafts")
    return BlockDecomposition(tuple(blocks))


@dataclass(frozen=True)
class SubcactusView:
    """Contiguous DFN range [lo_dfn, hi_dfn] seen as a cactus rooted at order[lo_dfn]."""
    structure: DfsStructure
    lo_dfn: int
    hi_dfn: int

    @property
    def root(self) -> int:
        return self.structure.order[self.lo_dfn]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.structure.order[self.lo_dfn:self.hi_dfn + 1]

    def __len__(self) -> int:
        return self.hi_dfn - self.lo_dfn + 1

    def __contains__(self, vertex: int) -> bool:
        return self.lo_dfn <= self.structure.dfn[vertex] <= self.hi_dfn


def subcactus_interval(s: DfsStructure, lo_dfn: int, hi_dfn: int) -> SubcactusView:
    """View of the vertices with DFN in [lo_dfn, hi_dfn]."""
    if not 0 <= lo_dfn <= hi_dfn < s.vertex_count:
        raise ValueError(f"DFN range [{lo_dfn}, {hi_dfn}] outside 0..{s.vertex_count - 1}")
    return SubcactusView(s, lo_dfn, hi_dfn)


def hanging_interval(s: DfsStructure, v: int) -> Tuple[int, int]:
    """DFN range of the subcactus rooted at FATHER(v) that precedes v in DFS order."""
    if v == s.root:
        raise ValueError("The DFS root has no father")
    return s.dfn[s.father[v]], s.dfn[v] - 1


def dump_structure(s: DfsStructure, g: WeightedGraph) -> str:
    """One tab-separated line per vertex, sorted by DFN: dfn vertex father root orien ind class."""
    lines = []
    for position, v in enumerate(s.order):
        vertex_class = classify_vertex(s, g, v)
        lines.append("\t".join(str(x) for x in (position, v, s.father[v], s.root_of[v],
                                                  s.orien[v], s.ind[v], vertex_class.value)))
    return "\n".join(lines) + "\n"
