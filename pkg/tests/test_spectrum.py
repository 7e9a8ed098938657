import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pancyclic.constructions import (
    bt,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    gn,
    path_graph,
    petersen_graph,
)
from pancyclic.graph import Graph
from pancyclic.spectrum import (
    MAX_DP_ORDER,
    batch_spectra,
    classify_pancyclicity,
    cycle_spectrum,
    edge_cycle_lengths,
    path_length_spectrum,
    vertex_cycle_lengths,
)

from .conftest import graphs
from .oracles import all_cycles, dfs_edge_lengths, dfs_path_lengths, dfs_vertex_lengths


def test_c5_vertex():
    for v in range(5):
        assert vertex_cycle_lengths(cycle_graph(5), v) == {5}


def test_bt9_identified_edge_endpoints_pancyclic():
    G = bt(9)
    for v in (0, 4):  # ends of the edge shared with the triangle
        assert vertex_cycle_lengths(G, v) == set(range(3, 10))


def test_petersen():
    P = petersen_graph()
    oracle = dfs_vertex_lengths(P)
    for v in range(10):
        assert oracle[v] == {5, 6, 8, 9}
        assert vertex_cycle_lengths(P, v) == {5, 6, 8, 9}
    assert cycle_spectrum(P).graph_lengths == {5, 6, 8, 9}


def test_bt_girth_circumference():
    s8 = cycle_spectrum(bt(8))
    assert (s8.girth, s8.circumference) == (3, 7)
    s9 = cycle_spectrum(bt(9))
    assert (s9.girth, s9.circumference) == (3, 9)
    assert s9.is_hamiltonian


def test_tree_is_acyclic():
    s = cycle_spectrum(path_graph(6))
    assert s.girth is None and s.circumference is None
    rep = classify_pancyclicity(path_graph(6))
    assert not rep.weakly_pancyclic_vertices
    assert not rep.graph_weakly_pancyclic and not rep.graph_pancyclic


def test_edge_lengths():
    for e in cycle_graph(5).edges():
        assert edge_cycle_lengths(cycle_graph(5), e) == {5}
    for e in complete_graph(4).edges():
        assert edge_cycle_lengths(complete_graph(4), e) == {3, 4}
    # the edge shared with the triangle: the triangle plus even cycles of K_{4,4}
    G = bt(9)
    assert edge_cycle_lengths(G, (0, 4)) == {3, 4, 6, 8} == dfs_edge_lengths(G)[(0, 4)]
    assert edge_cycle_lengths(G, (0, 8)) == {3, 5, 7, 9}


def test_edge_lengths_rejects_non_edge():
    with pytest.raises(ValueError):
        edge_cycle_lengths(cycle_graph(5), (0, 2))


def test_classify_g9():
    rep = classify_pancyclicity(gn(9))
    assert rep.weakly_pancyclic_vertices == {0, 3, 7}  # the triangle; 7 is the BT(8) apex


def test_classify_bt8():
    assert len(classify_pancyclicity(bt(8)).weakly_pancyclic_vertices) == 2


def test_classify_c5():
    rep = classify_pancyclicity(cycle_graph(5))
    assert rep.weakly_pancyclic_vertices == set(range(5))
    assert not rep.pancyclic_vertices
    assert rep.graph_weakly_pancyclic and not rep.graph_pancyclic


def test_path_lengths():
    assert path_length_spectrum(complete_bipartite(2, 2), 0, 2) == {1, 3}
    K33 = complete_bipartite(3, 3)
    assert path_length_spectrum(K33, 0, 1) == {2, 4}
    assert dfs_path_lengths(K33, 0, 1) == {2, 4}
    assert path_length_spectrum(path_graph(3), 0, 2) == {2}
    with pytest.raises(ValueError):
        path_length_spectrum(K33, 1, 1)


def test_order_cap():
    with pytest.raises(ValueError):
        cycle_spectrum(Graph.empty(MAX_DP_ORDER + 1))


def test_degenerate_orders():
    for n in (0, 1, 2):
        s = cycle_spectrum(Graph.empty(n))
        assert s.girth is None
        assert not classify_pancyclicity(Graph.empty(n)).weakly_pancyclic_vertices


# properties -----------------------------------------------------------------


@given(graphs(max_order=8))
def test_dp_matches_dfs(G):
    oracle = dfs_vertex_lengths(G)
    spec = cycle_spectrum(G)
    for v in range(G.order):
        assert spec.vertex_lengths(v) == oracle[v]
        assert vertex_cycle_lengths(G, v) == oracle[v]
    edges = dfs_edge_lengths(G)
    for e, lengths in edges.items():
        assert edge_cycle_lengths(G, e) == lengths


@given(graphs(min_order=2, max_order=7), st.data())
def test_path_dp_matches_dfs(G, data):
    u, w = data.draw(st.lists(st.integers(0, G.order - 1), min_size=2, max_size=2, unique=True))
    assert path_length_spectrum(G, u, w) == dfs_path_lengths(G, u, w)


@given(graphs(max_order=9))
def test_spectrum_invariants(G):
    spec = cycle_spectrum(G)
    gl = spec.graph_lengths
    assert (spec.girth is None) == (spec.circumference is None) == (not gl)
    if gl:
        assert spec.girth <= spec.circumference
    for k in gl:
        assert sum(k in spec.vertex_lengths(v) for v in range(G.order)) >= k
    assert spec.is_hamiltonian == (G.order in gl) == (spec.circumference == G.order)
    has_triangle = any(
        G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(a, c)
        for a, b, c in itertools.combinations(range(G.order), 3)
    )
    assert (spec.girth == 3) == has_triangle == any(3 in spec.vertex_lengths(v) for v in range(G.order))


@given(graphs(min_order=2, max_order=9), st.data())
def test_adding_an_edge_never_removes_lengths(G, data):
    missing = [(u, v) for u in range(G.order) for v in range(u + 1, G.order) if not G.has_edge(u, v)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    before = cycle_spectrum(G)
    after = cycle_spectrum(G.add_edge(*e))
    for v in range(G.order):
        assert before.vertex_lengths(v) <= after.vertex_lengths(v)


@given(graphs(max_order=9), st.data())
def test_relabel_commutes(G, data):
    perm = data.draw(st.permutations(list(range(G.order))))
    a = cycle_spectrum(G)
    b = cycle_spectrum(G.relabel(perm))
    for v in range(G.order):
        assert a.vertex_lengths(v) == b.vertex_lengths(perm[v])


@given(graphs(max_order=8))
def test_report_invariants(G):
    rep = classify_pancyclicity(G)
    assert rep.pancyclic_vertices <= rep.weakly_pancyclic_vertices or not rep.spectrum.graph_mask
    for u, w in rep.pancyclic_edges:
        assert u in rep.pancyclic_vertices and w in rep.pancyclic_vertices
    if rep.weakly_pancyclic_vertices:
        assert rep.graph_weakly_pancyclic
    # acyclic graphs report nothing
    if not all_cycles(G):
        assert not rep.weakly_pancyclic_vertices and not rep.graph_weakly_pancyclic


@given(st.lists(graphs(min_order=6, max_order=6), min_size=1, max_size=5))
def test_batch_matches_single(gs):
    import numpy as np

    rows = np.array([g.rows for g in gs], dtype=np.int64)
    sp = batch_spectra(rows, 6)
    for i, G in enumerate(gs):
        rep = classify_pancyclicity(G, edges=False)
        assert sp.weak_counts()[i] == len(rep.weakly_pancyclic_vertices)
        assert sp.pancyclic_counts()[i] == len(rep.pancyclic_vertices)
        assert sp.girth[i] == (rep.girth or 0)
        assert sp.circumference[i] == (rep.circumference or 0)
