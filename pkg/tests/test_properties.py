"""Property tests: connectivity and product laws against networkx on random small graphs."""

import itertools

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from doublegraph.core.connectivity import edge_connectivity, vertex_connectivity
from doublegraph.core.flow import FlowNetwork, max_flow
from doublegraph.core.graph import (
    Graph,
    basic_metrics,
    cut_vertices_and_bridges,
    is_bipartite,
    is_connected,
)
from doublegraph.core.product import double_n


@st.composite
def graphs(draw, min_p=2, max_p=7, connected=False):
    p = draw(st.integers(min_value=min_p, max_value=max_p))
    pairs = list(itertools.combinations(range(p), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {e for e, keep in zip(pairs, chosen) if keep}
    if connected:
        # spanning path
        edges |= {(i, i + 1) for i in range(p - 1)}
    return Graph(p, frozenset(edges))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert edge_connectivity(g).value == nx.edge_connectivity(h)
    assert vertex_connectivity(g).value == nx.node_connectivity(h)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_cut_vertices_and_bridges_match_networkx(g):
    h = to_nx(g)
    cut_vertices, bridges = cut_vertices_and_bridges(g)
    assert set(cut_vertices) == set(nx.articulation_points(h))
    assert {tuple(sorted(e)) for e in bridges} == {tuple(sorted(e)) for e in nx.bridges(h)}


@settings(max_examples=100, deadline=None)
@given(
    st.integers(min_value=2, max_value=8).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(
                    st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, 9)
                ),
                max_size=20,
            ),
        )
    )
)
def test_max_flow_matches_networkx(case):
    n, arcs = case
    net = FlowNetwork(n)
    h = nx.DiGraph()
    h.add_nodes_from(range(n))
    for tail, head, cap in arcs:
        if tail == head:
            continue
        net.add_arc(tail, head, cap)
        if h.has_edge(tail, head):
            h[tail][head]["capacity"] += cap
        else:
            h.add_edge(tail, head, capacity=cap)
    assert max_flow(net, 0, n - 1).value == nx.maximum_flow_value(h, 0, n - 1)


@settings(max_examples=60, deadline=None)
@given(graphs(max_p=6, connected=True), st.integers(min_value=2, max_value=3))
def test_double_n_connectivity_laws(g, n):
    kappa, lam = vertex_connectivity(g).value, edge_connectivity(g).value
    delta = basic_metrics(g).delta
    d = double_n(g, n).graph
    d_kappa, d_lam = vertex_connectivity(d).value, edge_connectivity(d).value
    assert d_kappa == n * kappa
    assert d_lam == min(n * delta, n * n * lam)
    assert d_kappa <= d_lam <= n * delta


@settings(max_examples=100, deadline=None)
@given(graphs(connected=True))
def test_whitney_chain(g):
    kappa, lam = vertex_connectivity(g).value, edge_connectivity(g).value
    assert kappa <= lam <= basic_metrics(g).delta


@settings(max_examples=60, deadline=None)
@given(graphs(max_p=5), st.integers(min_value=1, max_value=3))
def test_double_n_matches_tensor_product(g, n):
    """D_n[G] is G x (K_n with loops) as networkx builds it."""
    t = nx.complete_graph(n)
    t.add_edges_from((a, a) for a in range(n))
    expected = nx.tensor_product(to_nx(g), t)
    d = double_n(g, n)
    relabeled = {
        tuple(sorted((d.vertex_id(u, a), d.vertex_id(v, b)))) for (u, a), (v, b) in expected.edges
    }
    assert relabeled == set(d.graph.edges)
