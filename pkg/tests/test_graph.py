from itertools import combinations, permutations

import pytest
from hypothesis import given

from shadowplanar.generators import (
    complete_graph,
    cycle_graph,
    cycle_with_pendant,
    diamond,
    path_graph,
    petersen_graph,
)
from shadowplanar.graph import (
    CyclePath,
    Graph,
    GraphError,
    ThetaSubdivision,
    block_decomposition,
    build_graph,
    find_odd_cycle,
    find_theta,
    two_coloring,
)

from strategies import graphs


def brute_bipartite(g: Graph) -> bool:
    # independent of two_coloring: try every colouring
    for mask in range(1 << g.n):
        if all((mask >> u & 1) != (mask >> v & 1) for u, v in g.edges):
            return True
    return False


def test_build_graph_examples():
    k3 = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert k3.m == 3 and all(k3.degree(v) == 2 for v in range(3))
    assert build_graph(2, [(0, 1)]).edges == ((0, 1),)
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(3, [(0, 0)])


@pytest.mark.parametrize("edges", [[(0, 1), (1, 0)], [(0, 5)], [(-1, 0)]])
def test_build_graph_rejects(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


@given(graphs())
def test_adjacency_matches_edge_set(g):
    for u, v in combinations(range(g.n), 2):
        present = (u, v) in set(g.edges)
        assert present == (v in g.neighbors(u)) == (u in g.neighbors(v)) == g.has_edge(u, v)


def test_odd_cycle_examples():
    c = find_odd_cycle(complete_graph(3))
    assert c is not None and len(c) == 3 and c.is_valid(complete_graph(3))
    assert find_odd_cycle(cycle_graph(6)) is None
    p = petersen_graph()
    c = find_odd_cycle(p)
    assert c is not None and len(c) % 2 == 1 and c.is_valid(p)


def test_petersen_has_five_cycles_by_brute_force():
    p = petersen_graph()
    found = any(
        CyclePath((0, *perm)).is_valid(p) for rest in combinations(range(1, 10), 4) for perm in permutations(rest)
    )
    assert found


@given(graphs(max_n=8))
def test_odd_cycle_iff_not_two_colourable(g):
    c = find_odd_cycle(g)
    assert (c is None) == brute_bipartite(g)
    assert (c is None) == (two_coloring(g)[1] is None)
    if c is not None:
        assert len(c) % 2 == 1 and c.violation(g) is None


def test_cycle_path_violations():
    g = path_graph(4)
    assert CyclePath((0, 1, 2, 3), closed=False).is_valid(g)
    assert CyclePath((0, 1, 2, 3)).violation(g) == "(3, 0) is not an edge"
    assert CyclePath((0, 1, 0), closed=False).violation(g) == "repeated vertex"
    assert CyclePath((0, 1)).violation(g) == "cycle shorter than 3"


def test_blocks_examples():
    bd = block_decomposition(cycle_with_pendant(4))
    assert sorted(len(b.edges) for b in bd.blocks) == [1, 4]
    assert bd.cut_vertices == (0,)
    bd = block_decomposition(complete_graph(4))
    assert len(bd.blocks) == 1 and bd.cut_vertices == ()
    bd = block_decomposition(path_graph(5))
    assert len(bd.blocks) == 4 and all(b.is_bridge() for b in bd.blocks)
    assert bd.cut_vertices == (1, 2, 3)


@given(graphs())
def test_blocks_partition_edges(g):
    bd = block_decomposition(g)
    seen = [e for b in bd.blocks for e in b.edges]
    assert sorted(seen) == list(g.edges)
    cuts = set(bd.cut_vertices)
    for b1, b2 in combinations(bd.blocks, 2):
        shared = set(b1.vertices) & set(b2.vertices)
        assert len(shared) <= 1 and shared <= cuts
    # cut vertices really disconnect their component
    for x in range(g.n):
        comp = next(c for c in g.components() if x in c)
        rest = [v for v in comp if v != x]
        sub, _ = g.induced(rest)
        assert (x in cuts) == (len(rest) > 0 and not sub.is_connected())


def test_theta_examples():
    th = find_theta(diamond())
    assert th is not None and th.params == (1, 2, 1) and th.is_valid(diamond())
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert find_theta(bowtie) is None
    k4 = complete_graph(4)
    th = find_theta(k4)
    assert th is not None and th.is_valid(k4)


@given(graphs(max_n=8))
def test_theta_iff_block_not_edge_or_cycle(g):
    th = find_theta(g)
    bd = block_decomposition(g)
    simple = all(b.is_bridge() or b.is_cycle() for b in bd.blocks)
    assert (th is None) == simple
    if th is not None:
        assert th.violation(g) is None
        ell, m, n = th.params
        assert ell >= n >= 1 and m >= 2
        # fundamental cycles have orders ell + m and m + n
        assert len(th.side_a) + len(th.middle) + 2 == ell + m


def test_theta_violation_detects_shared_vertex():
    g = Graph(4, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 1)])
    th = ThetaSubdivision(0, 1, (2,), (), (2,))
    assert th.violation(g) is not None
    assert ThetaSubdivision(0, 1, (2,), (), (3,)).violation(g) is None


def test_components_and_induced():
    g = Graph(5, [(0, 1), (3, 4)])
    assert g.components() == [[0, 1], [2], [3, 4]]
    sub, labels = g.induced([3, 4])
    assert sub.n == 2 and sub.m == 1 and labels == [3, 4]
