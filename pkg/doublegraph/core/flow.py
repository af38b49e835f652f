"""
Integral max-flow kernel (Dinic phases: BFS level graph, blocking flow by
iterative DFS with current-arc pointers).

Arcs live in flat parallel arrays; arc e and its residual twin are e and e ^ 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, List, Optional

from .graph import GraphError


class SameEndpoints(GraphError):
    """Source and sink coincide."""


class NodeOutOfRange(GraphError):
    """An arc or terminal references a node outside the network."""


class NegativeCapacity(GraphError):
    """Capacities must be nonnegative integers."""


@dataclass(frozen=True)
class FlowResult:
    """
    value: maximum s-t flow (equal to the minimum cut capacity).
    source_side: nodes reachable from s in the final residual network, or None
        when the search stopped early at `cutoff`.
    """

    value: int
    source_side: Optional[FrozenSet[int]]
    truncated: bool = False


class FlowNetwork:
    """Directed network with integer capacities."""

    def __init__(self, node_count: int):
        if node_count < 0:
            raise NodeOutOfRange(f"node count must be nonnegative, got {node_count}")
        self.node_count = node_count
        self._head: List[int] = []
        self._cap: List[int] = []
        self._out: List[List[int]] = [[] for _ in range(node_count)]

    def _check(self, x: int) -> None:
        if not 0 <= x < self.node_count:
            raise NodeOutOfRange(f"node {x} outside 0..{self.node_count - 1}")

    def add_arc(self, tail: int, head: int, capacity: int) -> int:
        """Add tail -> head with the given capacity; returns the arc index."""
        self._check(tail)
        self._check(head)
        if capacity < 0:
            raise NegativeCapacity(f"capacity {capacity} on arc {tail}->{head}")
        e = len(self._head)
        self._head.extend((head, tail))
        self._cap.extend((capacity, 0))
        self._out[tail].append(e)
        self._out[head].append(e + 1)
        return e

    def add_edge(self, a: int, b: int, capacity: int) -> None:
        """Undirected edge as two opposite arcs of equal capacity."""
        self.add_arc(a, b, capacity)
        self.add_arc(b, a, capacity)


def max_flow(net: FlowNetwork, s: int, t: int, cutoff: Optional[int] = None) -> FlowResult:
    """
    Maximum s-t flow. With `cutoff`, stop as soon as the flow reaches it; the
    result is then marked truncated and carries no cut.
    """
    net._check(s)
    net._check(t)
    if s == t:
        raise SameEndpoints(f"source and sink are both {s}")

    head = net._head
    out = net._out
    residual = list(net._cap)
    n = net.node_count
    flow = 0

    while cutoff is None or flow < cutoff:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in out[x]:
                y = head[e]
                if residual[e] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    queue.append(y)
        if level[t] < 0:
            break

        pointer = [0] * n
        while cutoff is None or flow < cutoff:
            pushed = _augment(s, t, head, out, residual, level, pointer, cutoff, flow)
            if pushed == 0:
                break
            flow += pushed

    if cutoff is not None and flow >= cutoff:
        return FlowResult(value=flow, source_side=None, truncated=True)

    seen = [False] * n
    seen[s] = True
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for e in out[x]:
            y = head[e]
            if residual[e] > 0 and not seen[y]:
                seen[y] = True
                queue.append(y)
    return FlowResult(value=flow, source_side=frozenset(x for x in range(n) if seen[x]))


def _augment(s, t, head, out, residual, level, pointer, cutoff, flow) -> int:
    """Find one s-t path in the level graph and push its bottleneck."""
    path: List[int] = []
    x = s
    while x != t:
        arcs = out[x]
        advanced = False
        while pointer[x] < len(arcs):
            e = arcs[pointer[x]]
            y = head[e]
            if residual[e] > 0 and level[y] == level[x] + 1:
                path.append(e)
                x = y
                advanced = True
                break
            pointer[x] += 1
        if advanced:
            continue
        if x == s:
            return 0
        # dead end: retreat and skip the arc that led here
        level[x] = -1
        e = path.pop()
        x = head[e ^ 1]
        pointer[x] += 1
    bottleneck = min(residual[e] for e in path)
    if cutoff is not None:
        bottleneck = min(bottleneck, cutoff - flow)
    for e in path:
        residual[e] -= bottleneck
        residual[e ^ 1] += bottleneck
    return bottleneck
