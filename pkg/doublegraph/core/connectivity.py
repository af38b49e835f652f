"""
Exact vertex connectivity (kappa) and edge connectivity (lambda) with cut
witnesses, both reduced to the max-flow kernel in flow.py.

Every result is checked before it is returned: the witness must disconnect
the graph and its size must equal the value. For connected graphs the
Whitney chain kappa <= lambda <= delta is asserted as well.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .flow import FlowNetwork, SameEndpoints, max_flow
from .graph import (
    Edge,
    EmptyGraph,
    Graph,
    GraphError,
    VertexOutOfRange,
    basic_metrics,
    is_complete,
    is_connected,
    normalize_edge,
    remove_edges,
    remove_vertices,
)

logger = logging.getLogger(__name__)

VERTEX = "vertex"
EDGE = "edge"


class ConnectivityInvariantError(GraphError):
    """A computed value or witness contradicts itself; indicates a solver bug."""


@dataclass(frozen=True)
class CutWitness:
    kind: str
    vertices: Tuple[int, ...] = ()
    edges: Tuple[Edge, ...] = ()

    @classmethod
    def of_vertices(cls, vertices) -> "CutWitness":
        return cls(VERTEX, vertices=tuple(sorted(set(vertices))))

    @classmethod
    def of_edges(cls, edges) -> "CutWitness":
        return cls(EDGE, edges=tuple(sorted({normalize_edge(u, v) for u, v in edges})))

    @property
    def size(self) -> int:
        return len(self.vertices) if self.kind == VERTEX else len(self.edges)


@dataclass(frozen=True)
class ConnectivityResult:
    value: int
    witness: Optional[CutWitness] = None
    witness_absent_reason: Optional[str] = None


def verify_cut_witness(g: Graph, w: CutWitness) -> bool:
    """True iff deleting the witness disconnects g (or, for vertices, empties it)."""
    if w.kind == VERTEX:
        for x in w.vertices:
            if not 0 <= x < g.p:
                raise VertexOutOfRange(f"witness vertex {x} outside 0..{g.p - 1}")
        rest = remove_vertices(g, w.vertices)
        return rest.p == 0 or not is_connected(rest)
    if any(e not in g.edges for e in w.edges):
        return False
    return not is_connected(remove_edges(g, w.edges))


def _checked(g: Graph, result: ConnectivityResult, label: str) -> ConnectivityResult:
    w = result.witness
    if w is None:
        return result
    if w.size != result.value or not verify_cut_witness(g, w):
        raise ConnectivityInvariantError(
            f"{label} witness of size {w.size} does not certify value {result.value} on {g!r}"
        )
    return result


def edge_connectivity(g: Graph) -> ConnectivityResult:
    """
    lambda(G) by a fixed-source sweep: unit-capacity max-flow from vertex 0 to
    every other vertex, seeded with the star cut of a minimum-degree vertex.
    """
    if g.p == 0:
        raise EmptyGraph("edge connectivity of the null graph")
    if g.p == 1:
        return ConnectivityResult(0, None, "trivial")
    if not is_connected(g):
        return _checked(g, ConnectivityResult(0, CutWitness.of_edges(())), "lambda")

    degrees = basic_metrics(g).degrees
    v = degrees.index(min(degrees))
    best = degrees[v]
    witness = CutWitness.of_edges((v, y) for y in g.adjacency[v])

    net = FlowNetwork(g.p)
    for a, b in sorted(g.edges):
        net.add_edge(a, b, 1)
    for t in range(1, g.p):
        if best == 0:
            break
        res = max_flow(net, 0, t, cutoff=best)
        if res.truncated or res.value >= best:
            continue
        side = res.source_side
        best = res.value
        witness = CutWitness.of_edges(e for e in g.edges if (e[0] in side) != (e[1] in side))
    return _checked(g, ConnectivityResult(best, witness), "lambda")


def _split_network(g: Graph, unit_edges: bool) -> FlowNetwork:
    """Vertex x becomes in-node 2x and out-node 2x+1 joined by a unit arc."""
    net = FlowNetwork(2 * g.p)
    edge_cap = 1 if unit_edges else g.p
    for x in range(g.p):
        net.add_arc(2 * x, 2 * x + 1, 1)
    for a, b in sorted(g.edges):
        net.add_arc(2 * a + 1, 2 * b, edge_cap)
        net.add_arc(2 * b + 1, 2 * a, edge_cap)
    return net


def _local_vertex_cut(net: FlowNetwork, g: Graph, x: int, y: int, cutoff: int):
    res = max_flow(net, 2 * x + 1, 2 * y, cutoff=cutoff)
    if res.truncated or res.value >= cutoff:
        return None
    side = res.source_side
    cut = [z for z in range(g.p) if 2 * z in side and 2 * z + 1 not in side]
    return res.value, cut


def vertex_connectivity(g: Graph) -> ConnectivityResult:
    """
    kappa(G) via vertex splitting. Pairs tried: a minimum-degree vertex v
    against each non-neighbor, then each non-adjacent pair of neighbors of v.
    """
    if g.p == 0:
        raise EmptyGraph("vertex connectivity of the null graph")
    if is_complete(g):
        return ConnectivityResult(g.p - 1, None, "complete")
    if not is_connected(g):
        return _checked(g, ConnectivityResult(0, CutWitness.of_vertices(())), "kappa")

    degrees = basic_metrics(g).degrees
    v = degrees.index(min(degrees))
    best = degrees[v]
    cut: List[int] = list(g.adjacency[v])
    nbrs = g.neighbor_sets

    pairs = [(v, w) for w in range(g.p) if w != v and w not in nbrs[v]]
    around = g.adjacency[v]
    for i, x in enumerate(around):
        for y in around[i + 1:]:
            if y not in nbrs[x]:
                pairs.append((x, y))

    net = _split_network(g, unit_edges=False)
    for x, y in pairs:
        if best == 0:
            break
        found = _local_vertex_cut(net, g, x, y, best)
        if found is not None:
            best, cut = found
    return _checked(g, ConnectivityResult(best, CutWitness.of_vertices(cut)), "kappa")


def count_disjoint_paths(g: Graph, x: int, y: int, cutoff: Optional[int] = None) -> int:
    """Internally vertex-disjoint x-y paths; the edge xy itself counts as one."""
    for z in (x, y):
        if not 0 <= z < g.p:
            raise VertexOutOfRange(f"vertex {z} outside 0..{g.p - 1}")
    if x == y:
        raise SameEndpoints(f"paths from {x} to itself")
    net = _split_network(g, unit_edges=True)
    return max_flow(net, 2 * x + 1, 2 * y, cutoff=cutoff).value


def vertices_share_cycle(g: Graph, x: int, y: int) -> bool:
    """True iff some cycle of g passes through both x and y."""
    if x == y:
        return False
    return count_disjoint_paths(g, x, y, cutoff=2) >= 2


def connectivity_profile(g: Graph) -> Tuple[ConnectivityResult, ConnectivityResult]:
    """(kappa, lambda) of g, with the Whitney chain asserted for connected g."""
    kappa = vertex_connectivity(g)
    lam = edge_connectivity(g)
    if g.p >= 2 and is_connected(g):
        delta = basic_metrics(g).delta
        if not kappa.value <= lam.value <= delta:
            raise ConnectivityInvariantError(
                f"Whitney chain violated on {g!r}: kappa={kappa.value} lambda={lam.value} "
                f"delta={delta}"
            )
    logger.debug("[connectivity] %r kappa=%d lambda=%d", g, kappa.value, lam.value)
    return kappa, lam
