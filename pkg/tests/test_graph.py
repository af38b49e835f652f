"""Tests for the simple-graph core."""

import networkx as nx
import pytest

from doublegraph.core.graph import (
    DuplicateEdge,
    Graph,
    LoopEdge,
    VertexOutOfRange,
    basic_metrics,
    complete_graph,
    component_count,
    components,
    cut_vertices_and_bridges,
    graph_from_edge_list,
    has_leaf,
    induced_subgraph,
    is_bipartite,
    is_complete,
    is_connected,
    is_eulerian,
    remove_edges,
    remove_vertices,
)


def test_edges_are_normalized():
    """Pairs in either orientation become (u, v) with u < v."""
    g = graph_from_edge_list(3, [(1, 0), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        graph_from_edge_list(2, [(1, 1)])


def test_duplicate_rejected():
    """The same unordered pair twice is an error even in opposite orientations."""
    with pytest.raises(DuplicateEdge):
        graph_from_edge_list(2, [(0, 1), (1, 0)])


def test_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        graph_from_edge_list(2, [(0, 2)])


def test_basic_metrics(path4):
    m = basic_metrics(path4)
    assert (m.p, m.q) == (4, 3)
    assert m.degrees == (1, 2, 2, 1)
    assert m.delta == 1
    assert m.max_degree == 2


def test_null_graph_metrics():
    """The null graph has no components and counts as connected."""
    g = Graph(0)
    assert basic_metrics(g).delta == 0
    assert component_count(g) == 0
    assert is_connected(g)


def test_components():
    g = graph_from_edge_list(5, [(3, 4), (0, 2)])
    assert components(g) == [[0, 2], [1], [3, 4]]
    assert component_count(g) == 3
    assert not is_connected(g)


def test_cut_vertices_and_bridges_path(path4):
    assert cut_vertices_and_bridges(path4) == ([1, 2], [(0, 1), (1, 2), (2, 3)])


def test_cut_vertices_and_bridges_cycle(cycle4):
    assert cut_vertices_and_bridges(cycle4) == ([], [])


def test_cut_vertices_and_bridges_fig2(fig2):
    """Two triangles joined by one edge: its ends are the cut vertices."""
    assert cut_vertices_and_bridges(fig2) == ([2, 3], [(2, 3)])


def test_cut_vertices_match_networkx(fig4, petersen, cubic_pair):
    for g in (fig4, petersen, cubic_pair, graph_from_edge_list(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.p))
        nxg.add_edges_from(g.edges)
        cut, bridges = cut_vertices_and_bridges(g)
        assert cut == sorted(nx.articulation_points(nxg))
        assert bridges == sorted(tuple(sorted(e)) for e in nx.bridges(nxg))


def test_bipartite(cycle4, cycle5, path4):
    assert is_bipartite(cycle4)
    assert is_bipartite(path4)
    assert not is_bipartite(cycle5)


def test_eulerian(cycle4, path4):
    assert is_eulerian(cycle4)
    assert not is_eulerian(path4)
    assert is_eulerian(Graph(1))
    assert not is_eulerian(graph_from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_has_leaf(path4, cycle4):
    assert has_leaf(path4)
    assert not has_leaf(cycle4)


def test_induced_subgraph_relabels_in_given_order(cycle4):
    sub = induced_subgraph(cycle4, [2, 0, 1])
    assert sub == Graph(3, frozenset({(0, 2), (1, 2)}))


def test_remove_vertices(cycle4):
    assert remove_vertices(cycle4, [0]) == Graph(3, frozenset({(0, 1), (1, 2)}))


def test_remove_edges(cycle4):
    g = remove_edges(cycle4, [(3, 0)])
    assert g.p == 4
    assert g.edges == frozenset({(0, 1), (1, 2), (2, 3)})


def test_complete_graph():
    k5 = complete_graph(5)
    assert k5.q == 10
    assert is_complete(k5)
    assert is_complete(Graph(1))
    assert not is_complete(remove_edges(k5, [(0, 1)]))


def test_repr_is_short(k4):
    assert repr(k4) == "Graph(p=4, q=6)"
