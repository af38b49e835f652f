"""
Finite simple undirected graphs.

Vertices are the dense integers 0..p-1 and every edge is stored as a pair
(u, v) with u < v. Graph values are immutable; every structure query here is
a pure function, so graphs can be handed to worker processes freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

Edge = Tuple[int, int]
# sorted, duplicate-free
VertexSet = List[int]
EdgeSet = List[Edge]


class GraphError(Exception):
    """Base class for every error raised by doublegraph."""


class LoopEdge(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(GraphError):
    """The same unordered pair was given twice."""


class VertexOutOfRange(GraphError):
    """An endpoint lies outside 0..p-1."""


class EmptyGraph(GraphError):
    """An operation that needs p >= 1 received the null graph."""


class TrivialGraph(GraphError):
    """An operation that needs G != K1 received a single vertex."""


class DisconnectedInput(GraphError):
    """An operation that needs a connected graph received a disconnected one."""


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices 0..p-1 with normalized edges (u < v)."""

    p: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbor tuple per vertex."""
        nbrs: List[List[int]] = [[] for _ in range(self.p)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(row)) for row in nbrs)

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @property
    def q(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q})"


@dataclass(frozen=True)
class BasicMetrics:
    p: int
    q: int
    degrees: Tuple[int, ...]
    delta: int

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)


def graph_from_edge_list(p: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """
    Build a Graph from (u, v) pairs given in either orientation.

    Raises:
        LoopEdge: a pair has u == v
        DuplicateEdge: an unordered pair appears twice
        VertexOutOfRange: an endpoint is not in 0..p-1
    """
    if p < 0:
        raise VertexOutOfRange(f"vertex count must be nonnegative, got {p}")
    seen: Set[Edge] = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        for w in (u, v):
            if not 0 <= w < p:
                raise VertexOutOfRange(f"vertex {w} outside 0..{p - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        edge = normalize_edge(u, v)
        if edge in seen:
            raise DuplicateEdge(f"edge {edge[0]} {edge[1]} listed twice")
        seen.add(edge)
    return Graph(p, frozenset(seen))


def basic_metrics(g: Graph) -> BasicMetrics:
    degrees = tuple(len(row) for row in g.adjacency)
    return BasicMetrics(p=g.p, q=g.q, degrees=degrees, delta=min(degrees, default=0))


def components(g: Graph) -> List[List[int]]:
    """Vertex lists of the connected components, ordered by smallest member."""
    seen = [False] * g.p
    out: List[List[int]] = []
    for root in range(g.p):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def component_count(g: Graph) -> int:
    return len(components(g))


def is_connected(g: Graph) -> bool:
    """True iff g has at most one component (the null graph counts as connected)."""
    return component_count(g) <= 1


def cut_vertices_and_bridges(g: Graph) -> Tuple[VertexSet, EdgeSet]:
    """
    Articulation vertices and bridges via iterative DFS low-link.

    Returns a sorted vertex list and a sorted edge list.
    """
    disc = [-1] * g.p
    low = [0] * g.p
    cut: Set[int] = set()
    bridges: List[Edge] = []
    timer = 0
    for root in range(g.p):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frame: (vertex, parent, next neighbor index)
        stack: List[List[int]] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            x, parent, idx = frame
            nbrs = g.adjacency[x]
            if idx < len(nbrs):
                frame[2] += 1
                y = nbrs[idx]
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append([y, x, 0])
                elif y != parent:
                    low[x] = min(low[x], disc[y])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[x])
            if low[x] > disc[parent]:
                bridges.append(normalize_edge(parent, x))
            if parent != root and low[x] >= disc[parent]:
                cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    return sorted(cut), sorted(bridges)


def is_bipartite(g: Graph) -> bool:
    color: List[Optional[int]] = [None] * g.p
    for root in range(g.p):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] is None:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def is_eulerian(g: Graph) -> bool:
    """Connected with every degree even. K1 qualifies."""
    return is_connected(g) and all(len(row) % 2 == 0 for row in g.adjacency)


def has_leaf(g: Graph) -> bool:
    return any(len(row) == 1 for row in g.adjacency)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on `vertices`, relabeled 0..k-1 in the given order."""
    index: Dict[int, int] = {}
    for new, old in enumerate(vertices):
        if not 0 <= old < g.p:
            raise VertexOutOfRange(f"vertex {old} outside 0..{g.p - 1}")
        if old in index:
            raise DuplicateEdge(f"vertex {old} listed twice")
        index[old] = new
    edges = frozenset(
        normalize_edge(index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    )
    return Graph(len(index), edges)


def remove_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    drop = set(removed)
    return induced_subgraph(g, [x for x in range(g.p) if x not in drop])


def remove_edges(g: Graph, removed: Iterable[Sequence[int]]) -> Graph:
    drop = {normalize_edge(int(e[0]), int(e[1])) for e in removed}
    return Graph(g.p, frozenset(e for e in g.edges if e not in drop))


def complete_graph(p: int) -> Graph:
    return Graph(p, frozenset((u, v) for u in range(p) for v in range(u + 1, p)))


def is_complete(g: Graph) -> bool:
    return g.q == g.p * (g.p - 1) // 2
