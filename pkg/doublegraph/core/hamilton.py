"""
Hamiltonian cycles on small graphs and their lift into D_n[G].

Lift layout for a spanning cycle g_0 .. g_{k-1} of G (uv = g_0 g_1 and
u'v' = g_2 g_3 are the two removed edges):

    layer 0          path g_1 .. g_{k-1} g_0          (the cycle minus uv)
    layers 1..n-2    two strands; on odd layers strand A covers g_1 g_2 and
                     strand B covers g_0 g_{k-1} .. g_3, on even layers the
                     roles swap and both pieces are walked backwards
    layer n-1        the cycle minus uv (n even) or minus u'v' (n odd)

Strand A leaves layer 0 from g_0, strand B returns into g_1, and the last
layer joins the two strand ends. Consecutive layers are adjacent through
the cycle edges at the strand boundaries.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from .graph import Graph, GraphError
from .product import ZeroOrder, double_n

logger = logging.getLogger(__name__)

CycleSeq = List[int]


class LiftError(GraphError):
    """Base class for lift failures."""


class NotSpanningCycle(LiftError):
    """The supplied cycle is not a spanning cycle of the base graph."""


class TooShortForLift(LiftError):
    """Lifting to three or more layers needs two non-incident cycle edges."""


class LiftConstructionError(LiftError):
    """The stitched sequence failed validation; indicates a construction bug."""


def validate_spanning_cycle(h: Graph, c: Sequence[int]) -> bool:
    k = len(c)
    if k < 3 or k != h.p or len(set(c)) != k:
        return False
    if any(not 0 <= x < h.p for x in c):
        return False
    return all(h.has_edge(c[i], c[(i + 1) % k]) for i in range(k))


def hamiltonian_cycle(g: Graph) -> Optional[CycleSeq]:
    """
    Backtracking from vertex 0 over ascending neighbors. A branch is cut when
    some unvisited vertex has fewer than two usable neighbors left.
    """
    p = g.p
    if p < 3 or any(len(row) < 2 for row in g.adjacency):
        return None
    adj = g.adjacency
    visited = [False] * p
    visited[0] = True
    path = [0]

    def starved(current: int) -> bool:
        for x in range(p):
            if visited[x]:
                continue
            usable = sum(1 for y in adj[x] if not visited[y] or y == current or y == 0)
            if usable < 2:
                return True
        return False

    def extend(current: int) -> bool:
        if len(path) == p:
            return g.has_edge(current, 0)
        for y in adj[current]:
            if visited[y]:
                continue
            visited[y] = True
            path.append(y)
            if not starved(y) and extend(y):
                return True
            path.pop()
            visited[y] = False
        return False

    if extend(0):
        return list(path)
    return None


def find_cycle_through_edge(h: Graph, x: int, y: int, length: int) -> Optional[CycleSeq]:
    """A cycle of exactly `length` vertices using edge xy, listed from x then y."""
    if length < 3 or not h.has_edge(x, y):
        return None
    adj = h.adjacency
    path = [x, y]
    on_path = {x, y}

    def extend(current: int) -> bool:
        if len(path) == length:
            return h.has_edge(current, x)
        closing = len(path) == length - 1
        for z in adj[current]:
            if z in on_path or (closing and not h.has_edge(z, x)):
                continue
            path.append(z)
            on_path.add(z)
            if extend(z):
                return True
            path.pop()
            on_path.discard(z)
        return False

    return list(path) if extend(y) else None


def lift_hamiltonian(g: Graph, gamma: Sequence[int], n: int) -> CycleSeq:
    """
    Spanning cycle of D_n[G] built from a spanning cycle gamma of G.

    Raises:
        NotSpanningCycle: gamma is not a spanning cycle of g
        TooShortForLift: n >= 3 and gamma has fewer than four vertices
        LiftConstructionError: the result failed validation
    """
    if n < 1:
        raise ZeroOrder(f"lift needs n >= 1, got {n}")
    if not validate_spanning_cycle(g, gamma):
        raise NotSpanningCycle(f"{list(gamma)} is not a spanning cycle of {g!r}")
    gamma = list(gamma)
    k = len(gamma)
    if n == 1:
        return gamma
    if n >= 3 and k < 4:
        raise TooShortForLift(f"a {k}-cycle has no two non-incident edges")

    p = g.p

    def at(layer: int, seq: Sequence[int]) -> List[int]:
        return [layer * p + x for x in seq]

    minus_uv = gamma[1:] + gamma[:1]
    minus_u2v2 = gamma[3:] + gamma[:3]
    eta = gamma[:1] + gamma[:2:-1]
    pi = gamma[1:3]

    strand_a: List[int] = []
    strand_b: List[int] = []
    for layer in range(1, n - 1):
        if layer % 2 == 1:
            strand_a += at(layer, pi)
            strand_b += at(layer, eta)
        else:
            strand_a += at(layer, eta[::-1])
            strand_b += at(layer, pi[::-1])
    closing = minus_uv if n % 2 == 0 else minus_u2v2

    cycle = at(0, minus_uv) + strand_a + at(n - 1, closing) + strand_b[::-1]
    host = double_n(g, n).graph
    if not validate_spanning_cycle(host, cycle):
        raise LiftConstructionError(f"lifted sequence for n={n} is not a spanning cycle")
    logger.debug("[hamilton] lifted %d-cycle to %d layers", k, n)
    return cycle
