import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shadowplanar.constructions import ShadowKind, great_shadow, mycielskian, shadow, small_shadow
from shadowplanar.generators import complete_graph, cycle_graph, diamond, path_graph
from shadowplanar.graph import Graph
from shadowplanar.oracle import to_networkx

from strategies import graphs


def test_great_shadow_examples():
    s = great_shadow(Graph(2, [(0, 1)]))
    assert s.graph.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))
    assert nx.is_isomorphic(to_networkx(s.graph), to_networkx(diamond()))
    k3 = great_shadow(complete_graph(3)).graph
    assert (k3.n, k3.m) == (6, 12)
    assert nx.is_isomorphic(to_networkx(great_shadow(Graph(1)).graph), to_networkx(path_graph(2)))


def test_small_shadow_examples():
    s = small_shadow(Graph(2, [(0, 1)])).graph
    # v' - u - v - u'
    assert nx.is_isomorphic(to_networkx(s), to_networkx(path_graph(4)))
    assert s.edges == ((0, 1), (0, 3), (1, 2))
    assert small_shadow(Graph(1)).graph.m == 0
    c4 = small_shadow(cycle_graph(4)).graph
    assert (c4.n, c4.m) == (8, 12)


def test_mycielskian_examples():
    assert nx.is_isomorphic(to_networkx(mycielskian(Graph(2, [(0, 1)])).graph), to_networkx(cycle_graph(5)))
    mu = mycielskian(Graph(1))
    assert mu.graph.n == 3 and mu.graph.edges == ((1, 2),) and mu.center == 2
    grotzsch = mycielskian(cycle_graph(5)).graph
    assert (grotzsch.n, grotzsch.m) == (11, 20)
    assert not any(
        grotzsch.has_edge(a, b) and grotzsch.has_edge(b, c) and grotzsch.has_edge(a, c)
        for a, b, c in combinations(range(11), 3)
    )


def test_shadow_dispatch_and_labels():
    g = cycle_graph(4)
    for kind in ShadowKind:
        assert shadow(g, kind.value).kind is kind
    s = great_shadow(g)
    assert s.shadow(1) == 5 and s.original_of(5) == 1 and s.is_shadow(5) and not s.is_shadow(1)
    assert s.label(1) == "1" and s.label(5) == "1'"
    assert s.shadow_map() == {0: 4, 1: 5, 2: 6, 3: 7}
    with pytest.raises(ValueError):
        shadow(g, "huge")


@given(graphs(max_n=12))
def test_size_and_degree_laws(g):
    S = great_shadow(g)
    n, m = g.n, g.m
    assert (S.graph.n, S.graph.m) == (2 * n, 3 * m + n)
    assert small_shadow(g).graph.m == 3 * m
    mu = mycielskian(g).graph
    assert (mu.n, mu.m) == (2 * n + 1, 3 * m + n)
    for v in range(n):
        assert S.graph.degree(v) == 2 * g.degree(v) + 1
        assert S.graph.degree(v + n) == g.degree(v) + 1


@given(graphs(max_n=10))
def test_structure(g):
    n = g.n
    S, s, mu = great_shadow(g), small_shadow(g), mycielskian(g)
    for sg in (S, s):
        assert not any(a >= n and b >= n for a, b in sg.graph.edges)
        assert sg.original() == g
    assert all(b == 2 * n for a, b in mu.graph.edges if a >= n)
    assert set(s.graph.edges) <= set(S.graph.edges)
    # removing the centre of the Mycielskian gives the small shadow
    sub, _ = mu.graph.induced(range(2 * n))
    assert sub == s.graph


@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_monotonicity(g, rnd):
    h = g.edge_subgraph([e for e in g.edges if rnd.random() < 0.5])
    assert set(great_shadow(h).graph.edges) <= set(great_shadow(g).graph.edges)


def test_monotonicity_random_pairs():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 20)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.3])
        h = g.edge_subgraph([e for e in g.edges if rng.random() < 0.5])
        assert set(great_shadow(h).graph.edges) <= set(great_shadow(g).graph.edges)
