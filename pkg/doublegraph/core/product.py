"""
Total graphs T_n, the Kronecker product against a loop-bearing factor, and
the layered double graph D_n[G] = G x T_n.

Product vertex (u, a) gets id a * p(G) + u, so layer a of D_n[G] is the
contiguous id block [a*p, (a+1)*p).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple

from .graph import Edge, Graph, GraphError, VertexOutOfRange, normalize_edge

logger = logging.getLogger(__name__)


class ZeroOrder(GraphError):
    """T_n requested with n = 0."""


class EmptyFactor(GraphError):
    """A Kronecker factor has no vertices."""


class LayerOutOfRange(GraphError):
    """Layer index outside 0..n-1."""


class NotDouble(GraphError):
    """The cross-layer subgraph is only defined for n = 2."""


@dataclass(frozen=True)
class ReflexiveGraph:
    """Simple edges plus an optional loop per vertex."""

    p: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)
    loops: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for x in self.loops:
            if not 0 <= x < self.p:
                raise VertexOutOfRange(f"loop at {x} outside 0..{self.p - 1}")

    def adjacent(self, a: int, b: int) -> bool:
        if a == b:
            return a in self.loops
        return normalize_edge(a, b) in self.edges


def total_graph(n: int) -> ReflexiveGraph:
    """K_n with a loop at every vertex."""
    if n <= 0:
        raise ZeroOrder(f"total graph needs n >= 1, got {n}")
    edges = frozenset((a, b) for a in range(n) for b in range(a + 1, n))
    return ReflexiveGraph(n, edges, frozenset(range(n)))


def kronecker(g: Graph, h: ReflexiveGraph) -> Graph:
    """
    G x H with (u, a) adjacent to (v, b) iff uv in E(G) and ab in E(H)
    (a == b counts when H carries a loop at a).
    """
    if g.p < 1 or h.p < 1:
        raise EmptyFactor(f"kronecker factors must be nonempty (p(G)={g.p}, p(H)={h.p})")
    p = g.p
    h_arcs: List[Tuple[int, int]] = [(a, a) for a in sorted(h.loops)]
    for a, b in sorted(h.edges):
        h_arcs.append((a, b))
        h_arcs.append((b, a))
    edges = set()
    for u, v in g.edges:
        for a, b in h_arcs:
            edges.add(normalize_edge(a * p + u, b * p + v))
    return Graph(p * h.p, frozenset(edges))


@dataclass(frozen=True)
class LayeredGraph:
    """D_n[G] together with its base graph and layer count."""

    base: Graph
    n: int
    graph: Graph

    def vertex_id(self, u: int, i: int) -> int:
        return i * self.base.p + u

    def coordinates(self, x: int) -> Tuple[int, int]:
        """Inverse of vertex_id: (base vertex, layer)."""
        i, u = divmod(x, self.base.p)
        return u, i


def double_n(g: Graph, n: int) -> LayeredGraph:
    """
    D_n[G] = G x T_n built layer by layer: every base edge uv joins
    (u, i) to (v, j) for all layer pairs i, j. n = 2 is the double graph D[G].
    Equal edge-for-edge to kronecker(g, total_graph(n)).
    """
    if n <= 0:
        raise ZeroOrder(f"D_n needs n >= 1, got {n}")
    if g.p < 1:
        raise EmptyFactor("D_n of the null graph")
    p = g.p
    edges = frozenset(
        normalize_edge(i * p + u, j * p + v)
        for u, v in g.edges
        for i in range(n)
        for j in range(n)
    )
    product = Graph(n * p, edges)
    logger.debug("[product] D_%d of p=%d q=%d -> p=%d q=%d", n, g.p, g.q, product.p, product.q)
    return LayeredGraph(base=g, n=n, graph=product)


def layer_subgraph(d: LayeredGraph, i: int) -> Graph:
    """Layer i relabeled to 0..p-1; equal to the base graph."""
    if not 0 <= i < d.n:
        raise LayerOutOfRange(f"layer {i} outside 0..{d.n - 1}")
    p = d.base.p
    lo, hi = i * p, (i + 1) * p
    edges = frozenset(
        (u - lo, v - lo) for u, v in d.graph.edges if lo <= u < hi and lo <= v < hi
    )
    return Graph(p, edges)


def cross_layer_subgraph(d: LayeredGraph) -> Graph:
    """
    The spanning subgraph of D[G] keeping only edges between layers 0 and 1.
    It is the bipartite double cover G x K2, with 2q(G) edges.
    """
    if d.n != 2:
        raise NotDouble(f"cross-layer subgraph needs n = 2, got {d.n}")
    p = d.base.p
    edges = set()
    for u, v in d.base.edges:
        edges.add(normalize_edge(u, p + v))
        edges.add(normalize_edge(v, p + u))
    return Graph(2 * p, frozenset(edges))
