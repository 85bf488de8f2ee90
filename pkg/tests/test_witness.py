from itertools import product

import pytest

from shadowplanar.constructions import great_shadow, small_shadow
from shadowplanar.generators import complete_bipartite, complete_graph, cycle_graph, diamond, theta_graph
from shadowplanar.graph import CyclePath, Graph, find_odd_cycle
from shadowplanar.subdivision import K33Witness, validate_k33
from shadowplanar.witness import (
    SearchBoundExceeded,
    WitnessError,
    k33_from_odd_cycle,
    k33_from_theta,
    k33_search,
    shadow_witness,
)


@pytest.mark.parametrize("k", [3, 5, 7, 9, 11])
def test_odd_cycle_witness(k):
    g = cycle_graph(k)
    sg = great_shadow(g)
    w = k33_from_odd_cycle(sg, CyclePath(tuple(range(k))))
    assert validate_k33(sg.graph, w) == (True, None)
    long = [p for p in w.paths if len(p) > 2]
    if k == 3:
        assert long == []
    else:
        assert len(long) == 2
        p1, p2 = long
        assert not set(p1) & set(p2)
        for p in long:
            # consecutive vertices alternate between originals and shadows
            assert all((a < k) != (b < k) for a, b in zip(p, p[1:]))
            assert len(p) - 1 == k - 2


def test_triangle_witness_splits_originals_and_shadows():
    sg = great_shadow(complete_graph(3))
    w = k33_from_odd_cycle(sg, CyclePath((0, 1, 2)))
    assert set(w.delta1) == {0, 1, 2} and set(w.delta2) == {3, 4, 5}
    assert all(len(p) == 2 for p in w.paths)


def test_odd_cycle_witness_rejects_bad_input():
    sg = great_shadow(cycle_graph(4))
    with pytest.raises(WitnessError):
        k33_from_odd_cycle(sg, CyclePath((0, 1, 2, 3)))
    with pytest.raises(WitnessError):
        k33_from_odd_cycle(great_shadow(cycle_graph(5)), CyclePath((0, 2, 4)))
    with pytest.raises(WitnessError):
        k33_from_odd_cycle(small_shadow(complete_graph(3)), CyclePath((0, 1, 2)))


EVEN = [(ell, m, n) for ell, m, n in product((2, 4, 6), repeat=3)]
ODD = [(ell, m, n) for ell, m, n in product((3, 5), (3, 5, 7), (1, 3, 5))]
SMALL_SIDES = [(1, 3, 1), (1, 5, 1), (1, 7, 1), (1, 3, 3), (3, 3, 1), (1, 5, 3)]


@pytest.mark.parametrize("params", EVEN + ODD + SMALL_SIDES)
def test_theta_witness(params):
    g, th = theta_graph(*params)
    sg = great_shadow(g)
    w = k33_from_theta(sg, th)
    assert validate_k33(sg.graph, w) == (True, None)


def test_theta_case_shapes():
    g, th = theta_graph(4, 6, 4)
    w = k33_from_theta(great_shadow(g), th)
    a1, a2 = th.side_a[:2]
    N = g.n
    assert w.delta1 == (a1, a2, th.v) and w.delta2 == (a1 + N, a2 + N, th.u + N)
    g, th = theta_graph(5, 7, 3)
    w = k33_from_theta(great_shadow(g), th)
    a1, a2 = th.side_a[:2]
    N = g.n
    assert w.delta1 == (a1, a2, th.u) and w.delta2 == (a1 + N, a2 + N, th.v)


def test_theta_222_uses_direct_edge():
    g, th = theta_graph(2, 2, 2)
    sg = great_shadow(g)
    w = k33_from_theta(sg, th)
    i = w.pairs().index((th.v, th.u + g.n))
    assert w.paths[i] == (th.v, th.u + g.n)


@pytest.mark.parametrize("params", [(2, 3, 2), (1, 2, 2), (3, 4, 3)])
def test_mixed_parity_theta_has_odd_cycle(params):
    g, th = theta_graph(*params)
    assert find_odd_cycle(g) is not None
    with pytest.raises(WitnessError, match="mixed-parity"):
        k33_from_theta(great_shadow(g), th)




def test_validate_negatives():
    sg = great_shadow(complete_graph(3))
    good = k33_from_odd_cycle(sg, CyclePath((0, 1, 2)))
    assert validate_k33(sg.graph, good)[0]
    # two paths sharing an interior vertex
    host = Graph(8, list(sg.graph.edges) + [(2, 6), (6, 3), (0, 6), (6, 5)])
    d1, d2 = good.delta1, good.delta2
    paths = dict(zip(good.pairs(), good.paths))
    x, y = d1[0], d2[0]
    paths[x, y] = (x, 6, y)
    x2, y2 = d1[1], d2[1]
    paths[x2, y2] = (x2, 6, y2)
    ok, reason = validate_k33(host, K33Witness.from_mapping(d1, d2, paths))
    assert not ok
    # a non-edge step
    paths = dict(zip(good.pairs(), good.paths))
    paths[d1[0], d2[0]] = (d1[0], d1[1], d2[0])
    ok, reason = validate_k33(sg.graph, K33Witness.from_mapping(d1, d2, paths))
    assert not ok and reason is not None
    # overlapping branch sets
    ok, reason = validate_k33(sg.graph, K33Witness(d1, (d1[0], *d2[1:]), good.paths))
    assert not ok and "intersect" in reason


def test_search_examples():
    assert k33_search(great_shadow(complete_graph(3)).graph) is not None
    assert k33_search(great_shadow(cycle_graph(4)).graph) is None
    k33 = complete_bipartite(3, 3)
    w = k33_search(k33)
    assert w is not None and all(len(p) == 2 for p in w.paths)
    assert {frozenset(w.delta1), frozenset(w.delta2)} == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}
    assert k33_search(complete_graph(5)) is None
    with pytest.raises(SearchBoundExceeded):
        k33_search(cycle_graph(20), max_order=10)


def test_shadow_witness_dispatch():
    assert shadow_witness(cycle_graph(4)) is None
    for g in (complete_graph(3), diamond(), complete_graph(4), complete_bipartite(2, 3)):
        w = shadow_witness(g)
        assert w is not None and w.violation(great_shadow(g).graph) is None
