import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from sumgraphs import graphs as G
from oracles import two_colourable


@st.composite
def graphs(draw, max_n=16):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return G.Graph.from_edges(n, chosen)


@settings(max_examples=100)
@given(graphs())
def test_graph6_round_trip(g):
    s = G.emit_graph6(g)
    assert G.parse_graph6(s) == g
    assert G.emit_graph6(G.parse_graph6(s)) == s


@settings(max_examples=60)
@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    assert G.emit_graph6(g) == nx.to_graph6_bytes(ref, header=False).strip()
    back = nx.from_graph6_bytes(G.emit_graph6(g))
    assert {tuple(sorted(e)) for e in back.edges()} == set(g.edges())


@pytest.mark.parametrize("bad", [b"", b"A_x", b"B", b"~"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(G.GraphError):
        G.parse_graph6(bad)


@pytest.mark.parametrize("k", range(1, 7))
def test_hypercube_regular(k):
    q = G.hypercube(k)
    assert q.n == 2 ** k
    assert all(q.degree(v) == k for v in range(q.n))
    assert q.num_edges == k * 2 ** (k - 1)


@settings(max_examples=100)
@given(graphs(max_n=10))
def test_odd_cycle_iff_not_bipartite(g):
    adj = {v: set(g.neighbours(v)) for v in range(g.n)}
    assert G.has_odd_cycle(g) == (not two_colourable(g.n, adj))


@settings(max_examples=50)
@given(graphs(max_n=10))
def test_report_formats_round_trip(g):
    for fmt in ("json", "dot"):
        n, edges = G.parse_report(G.emit_report(g, fmt=fmt), fmt)
        assert n == g.n and edges == set(g.edges())


def test_named_graphs():
    assert G.petersen().num_edges == 15
    assert all(G.petersen().degree(v) == 3 for v in range(10))
    assert G.triangular_prism().num_edges == 9
    assert G.complete_bipartite(3, 3).num_edges == 9
    assert G.build_family(G.parse_family("C4+3K1")).n == 7
    with pytest.raises(G.GraphError):
        G.cycle(2)


def test_all_graphs_counts():
    assert [len(G.all_graphs(n)) for n in range(6)] == [1, 1, 2, 4, 11, 34]


def test_from_edges_rejects_loops():
    with pytest.raises(G.GraphError):
        G.Graph.from_edges(2, [(1, 1)])
