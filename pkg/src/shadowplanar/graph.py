"""Simple undirected graphs, block decomposition and forbidden-subgraph finders."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input (loops, duplicates, bad indices)."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple loopless graph on vertices ``0..n-1``.

    Adjacency lists are sorted, so every traversal built on them is
    deterministic.
    """

    __slots__ = ("_n", "_edges", "_adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"order must be non-negative, got {n}")
        seen: set[Edge] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for pair in edges:
            if len(pair) != 2:
                raise GraphError(f"edge must be a pair, got {pair!r}")
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex out of range in edge ({u}, {v}) for order {n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._edges = tuple(sorted(seen))
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._edge_set = frozenset(seen)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"

    def edge_subgraph(self, edges: Iterable[Sequence[int]]) -> Graph:
        """Graph on the same vertex set keeping only ``edges``."""
        return Graph(self._n, edges)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the old labels."""
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(labels), edges), labels


def build_graph(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(order, edges)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclePath:
    """A vertex sequence that is a path, or a cycle when ``closed`` is set."""

    vertices: tuple[int, ...]
    closed: bool = True

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        out = [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.closed and len(vs) > 2:
            out.append((vs[-1], vs[0]))
        return out

    def violation(self, g: Graph) -> Optional[str]:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return "repeated vertex"
        if self.closed and len(vs) < 3:
            return "cycle shorter than 3"
        for u, v in self.edges():
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return f"({u}, {v}) is not an edge"
        return None

    def is_valid(self, g: Graph) -> bool:
        return self.violation(g) is None


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def is_bridge(self) -> bool:
        return len(self.edges) == 1

    def is_cycle(self) -> bool:
        return len(self.edges) == len(self.vertices) >= 3


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected pieces and bridges) plus cut vertices.

    Isolated vertices carry no edges and belong to no block.
    """

    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]
    incidence: tuple[tuple[int, ...], ...] = field(default=())

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components by an iterative Hopcroft-Tarjan edge-stack DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    raw_blocks: list[list[Edge]] = []
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            v, parent, idx = stack[-1]
            nbrs = g.neighbors(v)
            if idx < len(nbrs):
                stack[-1] = (v, parent, idx + 1)
                w = nbrs[idx]
                if disc[w] == -1:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, 0))
                    if v == root:
                        root_children += 1
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    is_cut[parent] = True
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(_norm(*e))
                    if e == (parent, v):
                        break
                raw_blocks.append(block)
        if root_children > 1:
            is_cut[root] = True

    blocks = []
    for edges in raw_blocks:
        vs = sorted({x for e in edges for x in e})
        blocks.append(Block(tuple(vs), tuple(sorted(edges))))
    blocks.sort(key=lambda b: (b.vertices[0], b.vertices, b.edges))
    cuts = tuple(v for v in range(n) if is_cut[v])
    cut_set = set(cuts)
    incidence = tuple(tuple(v for v in b.vertices if v in cut_set) for b in blocks)
    return BlockDecomposition(tuple(blocks), cuts, incidence)


# ---------------------------------------------------------------------------
# Odd cycles
# ---------------------------------------------------------------------------


def two_coloring(g: Graph) -> tuple[list[int], Optional[Edge]]:
    """BFS 2-colouring. Returns colours and the first monochromatic edge, if any."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return color, (x, y)
    return color, None


def find_odd_cycle(g: Graph) -> Optional[CyclePath]:
    """An odd cycle of ``g``, or ``None`` when ``g`` is bipartite."""
    # second BFS pass keeps parents/depths for the conflicting component
    color, bad = two_coloring(g)
    if bad is None:
        return None
    x, y = bad
    parent = {x: None}
    depth = {x: 0}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if b not in parent:
                parent[b] = a
                depth[b] = depth[a] + 1
                queue.append(b)
    # an odd closed walk exists through the monochromatic edge; use a BFS tree
    # rooted at x and the first edge joining two vertices at equal depth
    for a in sorted(parent, key=lambda t: (depth[t], t)):
        for b in g.neighbors(a):
            if depth[a] == depth[b] and a < b:
                pa, pb = [a], [b]
                while pa[-1] != pb[-1]:
                    pa.append(parent[pa[-1]])
                    pb.append(parent[pb[-1]])
                cyc = pa + pb[-2::-1]
                return CyclePath(tuple(cyc), closed=True)
    raise AssertionError("non-bipartite component without an odd cycle")  # pragma: no cover


# ---------------------------------------------------------------------------
# Thetas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThetaSubdivision:
    """Three internally disjoint ``u``-``v`` paths, given by their interiors.

    ``side_a`` holds a1..a_l (a1 next to u), ``middle`` holds the interior of
    the shared path (may be empty when u and v are adjacent) and ``side_b``
    holds b1..b_n.
    """

    u: int
    v: int
    side_a: tuple[int, ...]
    middle: tuple[int, ...]
    side_b: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.side_a)

    @property
    def m(self) -> int:
        return len(self.middle) + 2

    @property
    def n(self) -> int:
        return len(self.side_b)

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.ell, self.m, self.n)

    def paths(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        u, v = self.u, self.v
        return ((u, *self.side_a, v), (u, *self.middle, v), (u, *self.side_b, v))

    def vertices(self) -> list[int]:
        return sorted({x for p in self.paths() for x in p})

    def edges(self) -> list[Edge]:
        return sorted({_norm(p[i], p[i + 1]) for p in self.paths() for i in range(len(p) - 1)})

    def swapped(self) -> ThetaSubdivision:
        return ThetaSubdivision(self.u, self.v, self.side_b, self.middle, self.side_a)

    def violation(self, g: Graph) -> Optional[str]:
        if self.ell < 1 or self.n < 1:
            return "side paths need at least one interior vertex"
        interiors = [*self.side_a, *self.middle, *self.side_b]
        everything = [self.u, self.v, *interiors]
        if len(set(everything)) != len(everything):
            return "paths are not internally disjoint"
        for p in self.paths():
            for a, b in zip(p, p[1:]):
                if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                    return f"({a}, {b}) is not an edge"
        return None

    def is_valid(self, g: Graph) -> bool:
        return self.violation(g) is None


def _find_cycle_in(adj: dict[int, list[int]], start: int) -> list[int]:
    """First cycle met by an iterative DFS from ``start`` (adjacency restricted to a block)."""
    parent = {start: None}
    depth = {start: 0}
    stack = [(start, iter(adj[start]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(adj[w])))
                break
            if w != parent[v] and depth[w] < depth[v]:
                cyc = [v]
                while cyc[-1] != w:
                    cyc.append(parent[cyc[-1]])
                return cyc[::-1]
        else:
            stack.pop()
    raise AssertionError("block without a cycle")  # pragma: no cover


def find_theta(g: Graph) -> Optional[ThetaSubdivision]:
    """A subdivided diamond in ``g``, or ``None`` when every block is an edge or a cycle.

    Take a cycle of the first offending block and an ear hanging off it.
    The ear becomes the shared (middle) path unless one of the two cycle arcs
    is a single edge, in which case that arc has to be the middle one.
    The longer side path is placed on the ``a`` side.
    """
    for block in block_decomposition(g).blocks:
        if len(block.edges) <= len(block.vertices):
            continue
        adj: dict[int, list[int]] = {v: [] for v in block.vertices}
        for a, b in block.edges:
            adj[a].append(b)
            adj[b].append(a)
        for a in adj:
            adj[a].sort()
        cycle = _find_cycle_in(adj, block.vertices[0])
        on_cycle = {v: i for i, v in enumerate(cycle)}
        cycle_edges = {_norm(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
        ear = _find_ear(adj, on_cycle, cycle_edges)
        x, y = ear[0], ear[-1]
        i, j = on_cycle[x], on_cycle[y]
        k = len(cycle)
        arc1 = [cycle[(i + t) % k] for t in range(((j - i) % k) + 1)]
        arc2 = [cycle[(i - t) % k] for t in range(((i - j) % k) + 1)]
        paths = [list(ear), arc1, arc2]
        middle_idx = 0
        for idx in (1, 2):
            if len(paths[idx]) == 2:
                middle_idx = idx
        middle = paths[middle_idx]
        sides = [p for idx, p in enumerate(paths) if idx != middle_idx]
        sides.sort(key=lambda p: (-len(p), p[1]))
        theta = ThetaSubdivision(
            u=x,
            v=y,
            side_a=tuple(sides[0][1:-1]),
            middle=tuple(middle[1:-1]),
            side_b=tuple(sides[1][1:-1]),
        )
        return theta
    return None


def _find_ear(adj: dict[int, list[int]], on_cycle: dict[int, int], cycle_edges: set[Edge]) -> list[int]:
    for x in sorted(on_cycle):
        for y in adj[x]:
            if _norm(x, y) in cycle_edges:
                continue
            if y in on_cycle:
                return [x, y]
            # BFS from y avoiding x; stop at the first other cycle vertex
            prev = {y: x}
            queue = deque([y])
            while queue:
                a = queue.popleft()
                for b in adj[a]:
                    if b in prev or b == x:
                        continue
                    prev[b] = a
                    if b in on_cycle:
                        path = [b]
                        while path[-1] != x:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    queue.append(b)
    raise AssertionError("no ear in a block with more edges than vertices")  # pragma: no cover

