"""Tests for the max-flow kernel."""

import pytest

from doublegraph.core.flow import (
    FlowNetwork,
    NegativeCapacity,
    NodeOutOfRange,
    SameEndpoints,
    max_flow,
)


DIAMOND_ARCS = ((0, 1, 3), (0, 2, 2), (1, 2, 1), (1, 3, 2), (2, 3, 3))


def _diamond() -> FlowNetwork:
    net = FlowNetwork(4)
    for tail, head, cap in DIAMOND_ARCS:
        net.add_arc(tail, head, cap)
    return net


def _cut_capacity(side) -> int:
    return sum(cap for tail, head, cap in DIAMOND_ARCS if tail in side and head not in side)


def test_max_flow_value():
    res = max_flow(_diamond(), 0, 3)
    assert res.value == 5
    assert not res.truncated


def test_source_side_is_a_min_cut():
    net = _diamond()
    res = max_flow(net, 0, 3)
    assert 0 in res.source_side
    assert 3 not in res.source_side
    assert _cut_capacity(res.source_side) == res.value


def test_cutoff_truncates():
    """The search stops once the flow reaches the cutoff and reports no cut."""
    res = max_flow(_diamond(), 0, 3, cutoff=2)
    assert res.truncated
    assert res.value == 2
    assert res.source_side is None


def test_cutoff_above_max_keeps_cut():
    res = max_flow(_diamond(), 0, 3, cutoff=9)
    assert not res.truncated
    assert res.value == 5
    assert res.source_side is not None


def test_network_is_reusable():
    """max_flow works on a residual copy; repeated runs agree."""
    net = _diamond()
    assert max_flow(net, 0, 3).value == max_flow(net, 0, 3).value == 5


def test_undirected_edges():
    net = FlowNetwork(3)
    net.add_edge(0, 1, 1)
    net.add_edge(1, 2, 1)
    net.add_edge(0, 2, 1)
    assert max_flow(net, 0, 2).value == 2
    assert max_flow(net, 2, 0).value == 2


def test_unreachable_sink():
    net = FlowNetwork(3)
    net.add_arc(0, 1, 4)
    res = max_flow(net, 0, 2)
    assert res.value == 0
    assert res.source_side == frozenset({0, 1})


def test_add_arc_returns_index():
    net = FlowNetwork(2)
    assert net.add_arc(0, 1, 1) == 0
    assert net.add_arc(1, 0, 1) == 2


def test_errors():
    net = FlowNetwork(2)
    with pytest.raises(NodeOutOfRange):
        net.add_arc(0, 2, 1)
    with pytest.raises(NegativeCapacity):
        net.add_arc(0, 1, -1)
    with pytest.raises(SameEndpoints):
        max_flow(net, 1, 1)
    with pytest.raises(NodeOutOfRange):
        FlowNetwork(-1)
