import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spectral_gap.errors import DuplicateEdgeError, SelfLoopError, VertexOutOfRangeError
from spectral_gap.families import complete_bipartite, cycle_graph, path_graph
from spectral_gap.graph import from_edge_list, structure


def test_single_edge():
    g = from_edge_list(2, [(1, 2)])
    assert g.n == 2 and g.m == 1
    assert g.degrees.tolist() == [1, 1]


def test_k22_minus_edge():
    g = from_edge_list(4, [(1, 3), (1, 4), (2, 3)])
    assert g.degrees.tolist() == [2, 1, 2, 1]
    assert g.neighbors(1) == [3, 4]
    assert g.neighbors(3) == [1, 2]
    assert list(g.edges()) == [(1, 3), (1, 4), (2, 3)]


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(1, 1)], SelfLoopError),
        (3, [(1, 2), (2, 1)], DuplicateEdgeError),
        (3, [(1, 2), (1, 2)], DuplicateEdgeError),
        (3, [(1, 4)], VertexOutOfRangeError),
        (3, [(0, 2)], VertexOutOfRangeError),
    ],
)
def test_rejects_bad_edges(n, edges, exc):
    with pytest.raises(exc):
        from_edge_list(n, edges)


def test_arrays_are_read_only():
    g = path_graph(4)
    with pytest.raises(ValueError):
        g.indices[0] = 3


def test_structure_p4():
    rep = structure(path_graph(4))
    assert rep.connected and rep.bipartite
    assert rep.diameter == 3
    assert (rep.max_degree, rep.min_degree) == (2, 1)
    assert rep.irregular


def test_structure_c5():
    rep = structure(cycle_graph(5))
    assert rep.connected and not rep.bipartite
    assert rep.diameter == 2
    assert rep.max_degree == rep.min_degree == 2
    assert not rep.irregular


def test_structure_k33():
    rep = structure(complete_bipartite(3, 3))
    assert rep.connected and rep.bipartite and rep.diameter == 2 and not rep.irregular
    assert rep.signs().tolist() == [1, 1, 1, -1, -1, -1]


def test_disconnected_has_no_diameter():
    rep = structure(from_edge_list(4, [(1, 2), (3, 4)]))
    assert not rep.connected
    assert rep.diameter is None
    assert rep.bipartite


@pytest.mark.parametrize("k", range(2, 21))
def test_path_diameter(k):
    assert structure(path_graph(k)).diameter == k - 1


def test_relabel_round_trip():
    g = from_edge_list(4, [(1, 4), (2, 3), (2, 4)])
    assert g.relabel([1, 4, 2, 3]) == path_graph(4)


@st.composite
def edge_sets(draw):
    n = draw(st.integers(1, 12))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return n, chosen


@settings(max_examples=150, deadline=None)
@given(edge_sets())
def test_invariants_against_networkx(data):
    n, edges = data
    g = from_edge_list(n, edges)
    a = g.adjacency_matrix()
    assert np.array_equal(a, a.T)
    assert np.all(np.diag(a) == 0)
    assert g.m == len(edges) == g.degrees.sum() // 2
    for i in range(n):
        nb = g.indices[g.indptr[i]:g.indptr[i + 1]]
        assert np.all(np.diff(nb) > 0)

    h = nx.Graph()
    h.add_nodes_from(range(1, n + 1))
    h.add_edges_from(edges)
    rep = structure(g)
    assert rep.connected == nx.is_connected(h)
    assert rep.bipartite == nx.is_bipartite(h)
    if rep.connected:
        assert rep.diameter == nx.diameter(h)
    if rep.bipartite:
        side = rep.bipartition
        assert all(side[u - 1] != side[v - 1] for u, v in edges)
