"""Named and random graphs used by tests, the CLI and the sweeps."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, ThetaSubdivision


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def diamond() -> Graph:
    """K4 minus the edge 0-3."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def cycle_with_pendant(k: int = 4) -> Graph:
    """``C_k`` on ``0..k-1`` plus vertex ``k`` hanging off vertex 0."""
    return Graph(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(0, k)])


def theta_graph(ell: int, m: int, n: int) -> tuple[Graph, ThetaSubdivision]:
    """The theta graph with side paths of ``ell`` and ``n`` interior vertices and
    a shared path on ``m`` vertices (``m - 2`` interior).

    Labels: u = 0, v = 1, then the a side, the shared interior and the b side.
    """
    if ell < 1 or n < 1 or m < 2:
        raise ValueError("need ell, n >= 1 and m >= 2")
    u, v = 0, 1
    nxt = 2
    a = tuple(range(nxt, nxt + ell))
    nxt += ell
    xi = tuple(range(nxt, nxt + m - 2))
    nxt += m - 2
    b = tuple(range(nxt, nxt + n))
    nxt += n
    edges = []
    for inner in (a, xi, b):
        seq = (u, *inner, v)
        edges.extend(zip(seq, seq[1:]))
    return Graph(nxt, edges), ThetaSubdivision(u, v, a, xi, b)


def subdivide(g: Graph, times: int = 1) -> Graph:
    """Replace every edge by a path with ``times`` new interior vertices."""
    edges = []
    nxt = g.n
    for u, v in g.edges:
        seq = [u, *range(nxt, nxt + times), v]
        nxt += times
        edges.extend(zip(seq, seq[1:]))
    return Graph(nxt, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n: int, extra_p: float, rng: random.Random) -> Graph:
    """A random spanning tree plus independent extra edges."""
    edges = {(min(i, j), max(i, j)) for i in range(1, n) for j in [rng.randrange(i)]}
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < extra_p:
            edges.add(e)
    return Graph(n, sorted(edges))


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_bipartite_cactus(max_n: int, rng: random.Random, cycle_p: float = 0.5) -> Graph:
    """Grow a connected bipartite cactus by pendant vertices and pendant even cycles.

    Vertices are relabelled by a random permutation so that the structure is
    not aligned with the index order.
    """
    edges: list[tuple[int, int]] = []
    n = 1
    while n < max_n:
        anchor = rng.randrange(n)
        room = max_n - n
        if room >= 3 and rng.random() < cycle_p:
            half = rng.randint(2, max(2, min(room + 1, 12) // 2))
            length = 2 * half
            if length - 1 > room:
                length = 4
            new = list(range(n, n + length - 1))
            seq = [anchor, *new, anchor]
            edges.extend(zip(seq, seq[1:]))
            n += length - 1
        else:
            edges.append((anchor, n))
            n += 1
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[a], perm[b]) for a, b in edges])
