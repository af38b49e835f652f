"""Tests for Hamiltonian search and the lift into D_n[G]."""

import pytest

from doublegraph.core.graph import Graph, complete_graph
from doublegraph.core.hamilton import (
    NotSpanningCycle,
    TooShortForLift,
    find_cycle_through_edge,
    hamiltonian_cycle,
    lift_hamiltonian,
    validate_spanning_cycle,
)
from doublegraph.core.product import ZeroOrder, double_n
from doublegraph.harness.corpus import named_fixture


def test_validate_spanning_cycle(cycle4):
    assert validate_spanning_cycle(cycle4, [0, 1, 2, 3])
    assert validate_spanning_cycle(cycle4, [2, 1, 0, 3])
    assert not validate_spanning_cycle(cycle4, [0, 2, 1, 3])
    assert not validate_spanning_cycle(cycle4, [0, 1, 2])
    assert not validate_spanning_cycle(cycle4, [0, 1, 1, 2])


def test_hamiltonian_cycle_found(cycle5, k4, fig4):
    for g in (cycle5, k4, fig4):
        gamma = hamiltonian_cycle(g)
        assert gamma is not None
        assert gamma[0] == 0
        assert validate_spanning_cycle(g, gamma)


def test_hamiltonian_cycle_absent(path4, fig2, petersen):
    assert hamiltonian_cycle(path4) is None
    assert hamiltonian_cycle(fig2) is None
    assert hamiltonian_cycle(petersen) is None
    assert hamiltonian_cycle(complete_graph(2)) is None
    assert hamiltonian_cycle(Graph(1)) is None


def test_lift_c4_two_layers(cycle4):
    assert lift_hamiltonian(cycle4, [0, 1, 2, 3], 2) == [1, 2, 3, 0, 5, 6, 7, 4]


def test_lift_c4_three_layers(cycle4):
    assert lift_hamiltonian(cycle4, [0, 1, 2, 3], 3) == [1, 2, 3, 0, 5, 6, 11, 8, 9, 10, 7, 4]


def test_lift_one_layer_is_identity(cycle5):
    assert lift_hamiltonian(cycle5, [0, 1, 2, 3, 4], 1) == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("fixture_id", ["cycle_5", "cycle_6", "complete_4", "complete_5", "fig4"])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lift_spans_double(fixture_id, n):
    g = named_fixture(fixture_id)
    cycle = lift_hamiltonian(g, hamiltonian_cycle(g), n)
    assert len(cycle) == n * g.p
    assert validate_spanning_cycle(double_n(g, n).graph, cycle)


def test_lift_triangle_two_layers():
    k3 = complete_graph(3)
    cycle = lift_hamiltonian(k3, [0, 1, 2], 2)
    assert validate_spanning_cycle(double_n(k3, 2).graph, cycle)


def test_lift_triangle_three_layers_too_short():
    with pytest.raises(TooShortForLift):
        lift_hamiltonian(complete_graph(3), [0, 1, 2], 3)


def test_lift_rejects_non_cycle(cycle4):
    with pytest.raises(NotSpanningCycle):
        lift_hamiltonian(cycle4, [0, 2, 1, 3], 2)


def test_lift_rejects_zero_layers(cycle4):
    with pytest.raises(ZeroOrder):
        lift_hamiltonian(cycle4, [0, 1, 2, 3], 0)


def test_find_cycle_through_edge(cycle4):
    h = double_n(cycle4, 2).graph
    c = find_cycle_through_edge(h, 0, 5, 4)
    assert c is not None
    assert c[:2] == [0, 5]
    assert len(set(c)) == 4
    assert all(h.has_edge(c[i], c[(i + 1) % 4]) for i in range(4))


def test_find_cycle_through_edge_bounds(cycle4, path4):
    assert find_cycle_through_edge(cycle4, 0, 1, 2) is None
    assert find_cycle_through_edge(cycle4, 0, 2, 4) is None
    assert find_cycle_through_edge(cycle4, 0, 1, 3) is None
    assert find_cycle_through_edge(path4, 0, 1, 3) is None
