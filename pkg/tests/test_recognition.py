import networkx as nx
import pytest
from hypothesis import given

from shadowplanar.constructions import small_shadow
from shadowplanar.generators import complete_graph, cycle_graph, cycle_with_pendant, diamond, path_graph, subdivide
from shadowplanar.graph import Graph, find_odd_cycle, find_theta
from shadowplanar.oracle import connected_graphs, is_planar, to_networkx
from shadowplanar.recognition import (
    BipartiteCactus,
    NotBipartite,
    NotCactus,
    NotCactusError,
    classify,
    cycle_tree,
    is_bipartite_cactus,
    small_shadow_planar,
)

from strategies import connected_graphs as connected, graphs


def test_classify_examples():
    v = classify(complete_graph(3))
    assert isinstance(v, NotBipartite) and sorted(v.cycle.vertices) == [0, 1, 2]
    assert isinstance(classify(cycle_with_pendant(4)), BipartiteCactus)
    sub = subdivide(diamond())
    v = classify(sub)
    assert isinstance(v, NotCactus) and v.theta.is_valid(sub)
    # the three branch paths have 1, 3 and 3 interior vertices, all odd
    t = v.theta
    assert sorted(map(len, (t.side_a, t.middle, t.side_b))) == [1, 3, 3]
    assert all(p % 2 == 1 for p in t.params)


def test_verdict_certificates():
    assert classify(complete_graph(3)).certificate()["odd_cycle"] == [0, 1, 2]
    cert = classify(subdivide(diamond())).certificate()["theta"]
    assert set(cert) == {"u", "v", "params", "paths"}
    assert classify(path_graph(3)).certificate()["cycle_tree"]["cut_vertices"] == [1]


def test_cycle_tree_examples():
    t = cycle_tree(cycle_with_pendant(4))
    assert t.cut_vertices == (0,) and len(t.cycles) == 1
    assert t.edges == ((("x", 0), ("c", 0)),)
    t = cycle_tree(cycle_graph(6))
    assert t.cut_vertices == () and len(t.cycles) == 1 and t.edges == ()
    two = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])
    t = cycle_tree(two)
    assert t.cut_vertices == (0,) and len(t.cycles) == 2
    assert set(t.edges) == {(("x", 0), ("c", 0)), (("x", 0), ("c", 1))}
    with pytest.raises(NotCactusError):
        cycle_tree(diamond())


@given(connected(max_n=12))
def test_cycle_tree_counts(g):
    if find_theta(g) is not None:
        return
    t = cycle_tree(g)
    assert len(t.cycles) == g.m - g.n + 1
    assert t.is_forest()
    cycle_edges = {(min(a, b), max(a, b)) for c in t.cycles for a, b in zip(c, c[1:] + c[:1])}
    assert len(cycle_edges) == sum(len(c) for c in t.cycles)
    cuts = set(t.cut_vertices)
    bridges = [e for e in g.edges if e not in cycle_edges and e[0] in cuts and e[1] in cuts]
    incidences = sum(len(set(c) & cuts) for c in t.cycles)
    assert len(t.edges) == incidences + len(bridges)
    # the forest is connected for a connected cactus
    h = nx.Graph()
    h.add_nodes_from(t.nodes)
    h.add_edges_from(t.edges)
    assert h.number_of_nodes() == 0 or nx.is_connected(h)


@given(graphs(max_n=8))
def test_classify_matches_finders(g):
    expected = find_odd_cycle(g) is None and find_theta(g) is None
    assert is_bipartite_cactus(g) == expected


def test_classify_exhaustive_small():
    for n in range(1, 7):
        for g in connected_graphs(n):
            expected = find_odd_cycle(g) is None and find_theta(g) is None
            assert is_bipartite_cactus(g) == expected
            # independent check: bipartite and every block an edge or cycle
            h = to_networkx(g)
            comps = list(nx.biconnected_component_edges(h))
            cactus = all(len(c) == 1 or len(c) == len({x for e in c for x in e}) for c in comps)
            assert is_bipartite_cactus(g) == (nx.is_bipartite(h) and cactus)


def test_small_shadow_examples():
    assert small_shadow_planar(complete_graph(4)).planar
    d = small_shadow_planar(complete_graph(5))
    assert not d.planar and "not K2, K3, K4-, K4" in d.reason
    chain = Graph(9, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (1, 5), (5, 6), (1, 6), (2, 7), (7, 8), (2, 8)])
    d = small_shadow_planar(chain)
    assert not d.planar and "triangle" in d.reason
    assert not is_planar(small_shadow(chain).graph)
    with pytest.raises(ValueError):
        small_shadow_planar(Graph(1))
    with pytest.raises(ValueError):
        small_shadow_planar(Graph(3, [(0, 1)]))
