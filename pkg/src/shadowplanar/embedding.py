"""Planar embeddings of great shadows of bipartite cacti.

Embeddings are rotation systems: for each vertex, its neighbours in
counterclockwise order. Faces are traced by the rule
``(u, v) -> (v, w)`` with ``w`` the counterclockwise successor of ``u``
around ``v``; this walks inner faces clockwise and the outer face
counterclockwise. A rotation system is certified planar when every
connected component satisfies ``n - m + f = 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .geometry import count_crossings, signed_area
from .graph import Block, Graph, block_decomposition
from .recognition import BipartiteCactus, classify, cycle_order

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    rotation: Mapping[int, tuple[int, ...]]
    outer: Optional[Dart] = None

    def __post_init__(self) -> None:
        for v, nbrs in self.rotation.items():
            for w in nbrs:
                if v not in self.rotation.get(w, ()):
                    raise EmbeddingError(f"rotation is not symmetric at edge ({v}, {w})")
        if self.outer is not None and self.outer[1] not in self.rotation.get(self.outer[0], ()):
            raise EmbeddingError(f"outer dart {self.outer} is not an edge")

    @cached_property
    def _pos(self) -> dict[int, dict[int, int]]:
        return {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in self.rotation.items()}

    @property
    def vertices(self) -> list[int]:
        return sorted(self.rotation)

    @property
    def order(self) -> int:
        return len(self.rotation)

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(v, w), max(v, w)) for v, ns in self.rotation.items() for w in ns})

    def darts(self) -> list[Dart]:
        return sorted((v, w) for v, ns in self.rotation.items() for w in ns)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.rotation and v in self._pos[u]

    def succ(self, v: int, w: int) -> int:
        """Counterclockwise successor of ``w`` around ``v``."""
        nbrs = self.rotation[v]
        return nbrs[(self._pos[v][w] + 1) % len(nbrs)]

    def pred(self, v: int, w: int) -> int:
        nbrs = self.rotation[v]
        return nbrs[(self._pos[v][w] - 1) % len(nbrs)]

    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        return (v, self.succ(v, u))

    def face(self, d: Dart) -> list[Dart]:
        out = [d]
        cur = self.next_dart(d)
        while cur != d:
            out.append(cur)
            cur = self.next_dart(cur)
        return out

    @cached_property
    def faces(self) -> tuple[tuple[Dart, ...], ...]:
        seen: set[Dart] = set()
        out = []
        for d in self.darts():
            if d in seen:
                continue
            f = self.face(d)
            seen.update(f)
            out.append(tuple(f))
        return tuple(out)

    def outer_face(self) -> tuple[Dart, ...]:
        if self.outer is None:
            return ()
        for f in self.faces:
            if self.outer in f:
                return f
        raise AssertionError("outer dart on no face")  # pragma: no cover

    def is_exposed(self, u: int, v: int) -> bool:
        f = self.outer_face()
        return (u, v) in f or (v, u) in f

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            i = 0
            while i < len(comp):
                for w in self.rotation[comp[i]]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                i += 1
            comps.append(sorted(comp))
        return comps

    def euler_characteristics(self) -> list[int]:
        """``n - m + f`` for each connected component (2 means genus zero)."""
        comp_of = {}
        comps = self.components()
        for i, c in enumerate(comps):
            for v in c:
                comp_of[v] = i
        nv = [len(c) for c in comps]
        ne = [0] * len(comps)
        nf = [0] * len(comps)
        for u, v in self.edges():
            ne[comp_of[u]] += 1
        for f in self.faces:
            nf[comp_of[f[0][0]]] += 1
        for i, c in enumerate(comps):
            if ne[i] == 0:
                nf[i] = 1
        return [nv[i] - ne[i] + nf[i] for i in range(len(comps))]

    def is_planar_embedding(self) -> bool:
        return all(x == 2 for x in self.euler_characteristics())

    def mirror(self) -> RotationSystem:
        rot = {v: tuple(reversed(ns)) for v, ns in self.rotation.items()}
        outer = None if self.outer is None else (self.outer[1], self.outer[0])
        return RotationSystem(rot, outer)

    def with_outer(self, d: Optional[Dart]) -> RotationSystem:
        return RotationSystem(self.rotation, d)

    def to_graph(self, order: Optional[int] = None) -> Graph:
        n = order if order is not None else (max(self.rotation) + 1 if self.rotation else 0)
        return Graph(n, self.edges())

    def to_dict(self) -> dict:
        return {
            "rotation": {str(v): list(self.rotation[v]) for v in self.vertices},
            "outer_face": [list(d) for d in self.outer_face()],
            "faces": len(self.faces),
            "euler": self.euler_characteristics(),
        }


def single_edge(v: int, vp: int) -> RotationSystem:
    return RotationSystem({v: (vp,), vp: (v,)}, (v, vp))


def single_vertex(v: int) -> RotationSystem:
    return RotationSystem({v: ()}, None)


def rotation_from_layout(
    positions: Mapping[int, tuple[float, float]], edges: Iterable[tuple[int, int]]
) -> RotationSystem:
    """Rotation system read off a straight-line drawing; the outer face is the
    one traced counterclockwise with the largest area."""
    nbrs: dict[int, list[int]] = {v: [] for v in positions}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = {}
    for v, ns in nbrs.items():
        x0, y0 = positions[v]
        rot[v] = tuple(sorted(ns, key=lambda w: math.atan2(positions[w][1] - y0, positions[w][0] - x0)))
    rs = RotationSystem(rot)
    best, best_area = None, 0.0
    for f in rs.faces:
        area = signed_area([positions[d[0]] for d in f])
        if area > best_area:
            best, best_area = f[0], area
    if best is None and rs.faces:
        best = rs.faces[0][0]
    return rs.with_outer(best)


# ---------------------------------------------------------------------------
# Outer face handling and gluing
# ---------------------------------------------------------------------------


def expose_edge(rs: RotationSystem, e: tuple[int, int]) -> RotationSystem:
    """Redesignate the outer face so that it borders edge ``e``.

    Moving the point at infinity into another face changes nothing but the
    choice of outer face, so the rotation is kept as is.
    """
    u, v = e
    if not rs.has_edge(u, v):
        raise EmbeddingError(f"({u}, {v}) is not an edge of the embedding")
    if rs.is_exposed(u, v):
        return rs
    return rs.with_outer((u, v))


def _rotate_after(seq: Sequence[int], x: int) -> list[int]:
    """Entries of the cyclic ``seq`` following ``x``, starting right after it."""
    i = seq.index(x)
    return list(seq[i + 1 :]) + list(seq[:i])


def _insert_after(seq: Sequence[int], x: int, items: Sequence[int]) -> tuple[int, ...]:
    i = seq.index(x)
    return tuple(seq[: i + 1]) + tuple(items) + tuple(seq[i + 1 :])


def _orient(rs: RotationSystem, d: Dart, what: str) -> RotationSystem:
    """Mirror ``rs`` if needed so that dart ``d`` lies on its outer face."""
    f = rs.outer_face()
    if d in f:
        return rs
    if (d[1], d[0]) in f:
        return rs.mirror()
    raise EmbeddingError(f"edge {d} is not on the outer face of {what}")


def glue_shared_edge(a: RotationSystem, b: RotationSystem, v: int, vp: int) -> RotationSystem:
    """Identify the exposed edge ``v vp`` of ``a`` and ``b``.

    ``b`` is placed inside the outer face of ``a`` next to the shared edge:
    its neighbours of ``v`` and ``vp`` are spliced in at the outer angles of
    ``a`` at those two vertices.
    """
    shared = set(a.rotation) & set(b.rotation)
    if shared != {v, vp}:
        raise EmbeddingError(f"pieces must share exactly {{{v}, {vp}}}, they share {sorted(shared)}")
    if not (a.has_edge(v, vp) and b.has_edge(v, vp)):
        raise EmbeddingError(f"({v}, {vp}) is missing from one of the pieces")
    a = _orient(a, (v, vp), "the first piece")
    b = _orient(b, (vp, v), "the second piece")
    x = a.pred(v, vp)
    rot = dict(a.rotation)
    rot.update({w: ns for w, ns in b.rotation.items() if w not in shared})
    rot[v] = _insert_after(a.rotation[v], x, _rotate_after(b.rotation[v], vp))
    rot[vp] = _insert_after(a.rotation[vp], v, _rotate_after(b.rotation[vp], v))
    return RotationSystem(rot, (x, v))


def glue_bridge(
    a: RotationSystem,
    b: RotationSystem,
    u: tuple[int, int],
    v: tuple[int, int],
) -> RotationSystem:
    """Join disjoint pieces by the edges ``u v``, ``u v'`` and ``v u'``.

    ``u = (u, u')`` must be exposed in ``a`` and ``v = (v, v')`` in ``b``.
    The edges ``u v'`` and ``v u'`` go round the outside and enclose ``u v``.
    """
    (uu, up), (vv, vp) = u, v
    if set(a.rotation) & set(b.rotation):
        raise EmbeddingError("pieces joined by a bridge must be vertex-disjoint")
    if not a.has_edge(uu, up) or not b.has_edge(vv, vp):
        raise EmbeddingError("both pieces need their vertex-shadow edge")
    a = _orient(a, (up, uu), "the first piece")
    b = _orient(b, (vp, vv), "the second piece")
    rot = {**a.rotation, **b.rotation}
    rot[uu] = _insert_after(a.rotation[uu], up, (vv, vp))
    rot[up] = _insert_after(a.rotation[up], a.pred(up, uu), (vv,))
    rot[vv] = _insert_after(b.rotation[vv], vp, (uu, up))
    rot[vp] = _insert_after(b.rotation[vp], b.pred(vp, vv), (uu,))
    return RotationSystem(rot, (vp, uu))


def disjoint_union(pieces: Sequence[RotationSystem]) -> RotationSystem:
    rot: dict[int, tuple[int, ...]] = {}
    for p in pieces:
        if set(rot) & set(p.rotation):
            raise EmbeddingError("pieces overlap")
        rot.update(p.rotation)
    outer = next((p.outer for p in pieces if p.outer is not None), None)
    return RotationSystem(rot, outer)


# ---------------------------------------------------------------------------
# Even-cycle circular layout
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CircularLayout:
    """Cycle on the unit circle, shadows on the same rays.

    Shadows of cycle positions 1, 3, 5, ... (1-based) sit outside the circle
    at ``d_out``; the others sit inside at ``d_in``.
    """

    cycle: tuple[int, ...]
    shadows: tuple[int, ...]
    d_in: float
    d_out: float
    angles: tuple[float, ...]
    center: tuple[float, float] = (0.0, 0.0)
    radius: float = 1.0
    positions: Mapping[int, tuple[float, float]] = field(default_factory=dict)

    def edges(self) -> list[tuple[int, int]]:
        c, s = self.cycle, self.shadows
        k = len(c)
        out = []
        for i in range(k):
            j = (i + 1) % k
            out += [(c[i], c[j]), (c[i], s[j]), (c[j], s[i]), (c[i], s[i])]
        return sorted((min(x, y), max(x, y)) for x, y in out)

    def crossings(self, tol: float = 1e-9) -> list[tuple[int, int]]:
        es = self.edges()
        segs = [(self.positions[u], self.positions[v]) for u, v in es]
        return count_crossings(segs, es, tol)

    def rotation_system(self) -> RotationSystem:
        return rotation_from_layout(self.positions, self.edges())


def draw_even_cycle_shadow(
    order: int,
    d_in: float = 0.5,
    d_out: float = 1.5,
    labels: Optional[Sequence[int]] = None,
    shadow_labels: Optional[Sequence[int]] = None,
    angles: Optional[Sequence[float]] = None,
) -> CircularLayout:
    """Straight-line drawing of the great shadow of an even cycle.

    Defaults label the cycle ``0..order-1`` and the shadows ``order..2*order-1``.
    Any ``0 < d_in < 1 < d_out`` works, as does any strictly increasing
    choice of ``angles`` covering less than a full turn.
    """
    if order < 4 or order % 2:
        raise ValueError(f"need an even cycle of order >= 4, got {order}")
    if not (0 < d_in < 1 < d_out):
        raise ValueError("need 0 < d_in < 1 < d_out")
    cyc = tuple(labels) if labels is not None else tuple(range(order))
    sh = tuple(shadow_labels) if shadow_labels is not None else tuple(x + order for x in range(order))
    if len(cyc) != order or len(sh) != order:
        raise ValueError("label count does not match the order")
    if angles is None:
        angs = tuple(2 * math.pi * i / order for i in range(order))
    else:
        angs = tuple(float(t) for t in angles)
        if len(angs) != order or any(b <= a for a, b in zip(angs, angs[1:])) or angs[-1] - angs[0] >= 2 * math.pi:
            raise ValueError("angles must be strictly increasing within one turn")
    pos = {}
    for i, (v, s, t) in enumerate(zip(cyc, sh, angs)):
        cx, cy = math.cos(t), math.sin(t)
        r = d_out if i % 2 == 0 else d_in  # i = 0 is position 1
        pos[v] = (cx, cy)
        pos[s] = (r * cx, r * cy)
    return CircularLayout(cyc, sh, d_in, d_out, angs, positions=pos)


# ---------------------------------------------------------------------------
# Recursive construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    """One step of the recursion: a base piece or a glue operation."""

    kind: str  # "vertex", "cycle", "shared-edge", "bridge"
    vertices: tuple[int, ...]  # vertices of the original graph involved


class _Builder:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.N = g.n
        self.bd = block_decomposition(g)
        self.blocks_at: dict[int, list[int]] = {v: [] for v in g.vertices()}
        for i, b in enumerate(self.bd.blocks):
            for v in b.vertices:
                self.blocks_at[v].append(i)
        self.trace: list[Piece] = []

    def s(self, v: int) -> int:
        return v + self.N

    def vertex(self, y: int, parent_block: Optional[int]) -> RotationSystem:
        """Shadow of everything hanging below ``y`` (excluding ``parent_block``)."""
        rs = single_edge(y, self.s(y))
        self.trace.append(Piece("vertex", (y,)))
        for bi in self.blocks_at[y]:
            if bi == parent_block:
                continue
            block = self.bd.blocks[bi]
            if block.is_bridge():
                (z,) = [x for x in block.vertices if x != y]
                child = self.vertex(z, bi)
                rs = glue_bridge(
                    expose_edge(rs, (y, self.s(y))),
                    expose_edge(child, (z, self.s(z))),
                    (y, self.s(y)),
                    (z, self.s(z)),
                )
                self.trace.append(Piece("bridge", (y, z)))
            else:
                child = self.cycle(bi, y)
                rs = self.glue(rs, child, y)
        return rs

    def cycle(self, bi: int, root: int) -> RotationSystem:
        block: Block = self.bd.blocks[bi]
        order = cycle_order(block)
        i = order.index(root)
        order = order[i:] + order[:i]
        layout = draw_even_cycle_shadow(
            len(order), labels=order, shadow_labels=[self.s(x) for x in order]
        )
        rs = layout.rotation_system()
        self.trace.append(Piece("cycle", tuple(order)))
        for x in order[1:]:
            if len(self.blocks_at[x]) > 1:
                child = self.vertex(x, bi)
                rs = self.glue(rs, child, x)
        return rs

    def glue(self, rs: RotationSystem, child: RotationSystem, x: int) -> RotationSystem:
        e = (x, self.s(x))
        if child.order == 2:
            return rs
        self.trace.append(Piece("shared-edge", (x,)))
        return glue_shared_edge(expose_edge(rs, e), expose_edge(child, e), *e)


def embed_shadow_traced(
    g: Graph, verdict: Optional[BipartiteCactus] = None
) -> tuple[RotationSystem, list[Piece]]:
    """Like :func:`embed_shadow`, also returning the recursion steps."""
    if verdict is None:
        verdict = classify(g)
    if not isinstance(verdict, BipartiteCactus):
        raise EmbeddingError(f"great shadow is not planar: graph is {verdict.name}")
    builder = _Builder(g)
    pieces = [builder.vertex(comp[0], None) for comp in g.components()]
    rs = disjoint_union(pieces)
    if not rs.is_planar_embedding():
        raise AssertionError(f"Euler check failed: {rs.euler_characteristics()}")  # pragma: no cover
    return rs, builder.trace


def embed_shadow(g: Graph, verdict: Optional[BipartiteCactus] = None) -> RotationSystem:
    """Euler-certified rotation system of the great shadow of a bipartite cactus.

    Works bottom-up over the block tree: a vertex starts as the edge
    ``v v'``, an even cycle starts from its circular drawing, pendant pieces
    are glued along ``v v'`` and bridges add ``u v``, ``u v'`` and ``v u'``.
    """
    return embed_shadow_traced(g, verdict)[0]
