"""Coordinates and SVG output for certified shadow embeddings.

A lone even cycle is drawn with its circular construction. Anything glued
together is drawn straight-line on an integer grid from its rotation system
(Chrobak-Payne, via networkx), so feature size stays polynomial however deep
the gluing recursion goes. Every drawing is checked for crossings before it
is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import networkx as nx
from networkx.algorithms.planar_drawing import combinatorial_embedding_to_pos

from .embedding import CircularLayout, Piece, RotationSystem, draw_even_cycle_shadow, embed_shadow_traced
from .geometry import TOL, count_crossings
from .graph import Block, Graph
from .recognition import BipartiteCactus, classify, cycle_order

Point = tuple[float, float]


class CrossingError(AssertionError):
    """A drawing produced by this module has crossing edges (a bug, never expected)."""


@dataclass(frozen=True)
class Region:
    label: str
    xmin: float
    ymin: float
    xmax: float
    ymax: float


@dataclass(frozen=True)
class Drawing:
    positions: Mapping[int, Point]
    polylines: Mapping[tuple[int, int], tuple[Point, ...]]
    shadow_vertices: frozenset[int] = frozenset()
    labels: Mapping[int, str] = field(default_factory=dict)
    regions: tuple[Region, ...] = ()

    def segments(self) -> tuple[list[tuple[Point, Point]], list[tuple[object, object]]]:
        segs, ids = [], []
        for (u, v), pts in sorted(self.polylines.items()):
            names: list[object] = [u, *[("bend", u, v, i) for i in range(1, len(pts) - 1)], v]
            for i in range(len(pts) - 1):
                segs.append((pts[i], pts[i + 1]))
                ids.append((names[i], names[i + 1]))
        return segs, ids

    def crossings(self, tol: float = TOL) -> list[tuple[int, int]]:
        segs, ids = self.segments()
        return count_crossings(segs, ids, tol)

    def bbox(self) -> tuple[float, float, float, float]:
        pts = list(self.positions.values()) + [p for pl in self.polylines.values() for p in pl]
        if not pts:
            return (0.0, 0.0, 1.0, 1.0)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return (min(xs), min(ys), max(xs), max(ys))

    def to_svg(self, width: int = 800, label_vertices: bool = True) -> bytes:
        return to_svg(self, width=width, label_vertices=label_vertices)


def drawing_from_layout(layout: CircularLayout, labels: Optional[Mapping[int, str]] = None) -> Drawing:
    pos = dict(layout.positions)
    poly = {e: (pos[e[0]], pos[e[1]]) for e in layout.edges()}
    return Drawing(pos, poly, frozenset(layout.shadows), dict(labels or {}))


def _straight(pos: Mapping[int, Point], edges) -> dict[tuple[int, int], tuple[Point, ...]]:
    return {(u, v): (pos[u], pos[v]) for u, v in edges}


def grid_positions(rs: RotationSystem) -> dict[int, Point]:
    """Integer straight-line coordinates realising the rotation system."""
    verts = rs.vertices
    if len(verts) <= 2:
        return {v: (0.0, float(i)) for i, v in enumerate(verts)}
    emb = nx.PlanarEmbedding()
    emb.set_data({v: list(reversed(rs.rotation[v])) for v in verts})
    pos = combinatorial_embedding_to_pos(emb)
    return {v: (float(pos[v][0]), float(pos[v][1])) for v in verts}


def rotation_matches(rs: RotationSystem, pos: Mapping[int, Point]) -> bool:
    """Does the straight-line drawing realise ``rs`` (or its mirror image)?"""

    def ccw(v: int) -> list[int]:
        x0, y0 = pos[v]
        return sorted(rs.rotation[v], key=lambda w: math.atan2(pos[w][1] - y0, pos[w][0] - x0))

    def same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
        if len(a) != len(b):
            return False
        if not a:
            return True
        i = b.index(a[0])
        return list(b[i:]) + list(b[:i]) == list(a)

    forward = all(same_cycle(ccw(v), rs.rotation[v]) for v in rs.vertices)
    backward = all(same_cycle(ccw(v), list(reversed(rs.rotation[v]))) for v in rs.vertices)
    return forward or backward


def _piece_regions(trace: Sequence[Piece], pos: Mapping[int, Point], n: int) -> list[Region]:
    out = []
    for p in trace:
        if p.kind not in ("cycle", "bridge"):
            continue
        verts = [x for v in p.vertices for x in (v, v + n)]
        xs = [pos[x][0] for x in verts]
        ys = [pos[x][1] for x in verts]
        label = f"{p.kind}:{'-'.join(map(str, p.vertices))}"
        out.append(Region(label, min(xs), min(ys), max(xs), max(ys)))
    return out


def render_shadow(g: Graph, verdict: Optional[BipartiteCactus] = None, check: bool = True) -> Drawing:
    """Crossing-free drawing of the great shadow of a bipartite cactus ``g``.

    Components are drawn independently and laid out left to right.
    """
    if verdict is None:
        verdict = classify(g)
    rs, trace = embed_shadow_traced(g, verdict)
    n = g.n
    labels = {v: str(v) for v in range(n)} | {v + n: f"{v}'" for v in range(n)}
    positions: dict[int, Point] = {}
    offset = 0.0
    for comp in g.components():
        pos = _component_positions(g, comp, rs)
        xs = [p[0] for p in pos.values()]
        ys = [p[1] for p in pos.values()]
        dx = offset - min(xs)
        dy = -min(ys)
        for v, (x, y) in pos.items():
            positions[v] = (x + dx, y + dy)
        offset += (max(xs) - min(xs)) + 2.0
    drawing = Drawing(
        positions,
        _straight(positions, rs.edges()),
        frozenset(range(n, 2 * n)),
        labels,
        tuple(_piece_regions(trace, positions, n)),
    )
    if check:
        bad = drawing.crossings()
        if bad:
            raise CrossingError(f"{len(bad)} crossing pairs in rendered drawing")
    return drawing


def _component_positions(g: Graph, comp: list[int], rs: RotationSystem) -> dict[int, Point]:
    n = g.n
    sub, labels = g.induced(comp)
    if sub.n == 1:
        v = comp[0]
        return {v: (0.0, 0.0), v + n: (0.0, 1.0)}
    if sub.n >= 4 and sub.m == sub.n and all(sub.degree(x) == 2 for x in sub.vertices()):
        edges = tuple((labels[a], labels[b]) for a, b in sub.edges)
        order = cycle_order(Block(tuple(comp), edges))
        layout = draw_even_cycle_shadow(len(order), labels=order, shadow_labels=[x + n for x in order])
        scale = max(2.0, len(order) / math.pi)
        return {v: (scale * x, scale * y) for v, (x, y) in layout.positions.items()}
    verts = set(comp) | {v + n for v in comp}
    piece = RotationSystem({v: rs.rotation[v] for v in verts})
    pos = grid_positions(piece)
    if not rotation_matches(piece, pos):  # pragma: no cover - guarded by the crossing test
        raise CrossingError("grid drawing does not realise the embedding")
    return pos


def render_layout(layout: CircularLayout) -> Drawing:
    labels = {v: str(v) for v in layout.cycle} | {s: f"{v}'" for v, s in zip(layout.cycle, layout.shadows)}
    d = drawing_from_layout(layout, labels)
    if d.crossings():
        raise CrossingError("circular layout has crossings")
    return d


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def to_svg(d: Drawing, width: int = 800, label_vertices: bool = True) -> bytes:
    """Deterministic SVG; the viewBox is the bounding box plus a 5% margin."""
    x0, y0, x1, y1 = d.bbox()
    w = max(x1 - x0, 1e-6)
    h = max(y1 - y0, 1e-6)
    mx, my = 0.05 * max(w, h), 0.05 * max(w, h)
    scale = width / (w + 2 * mx)
    height = (h + 2 * my) * scale

    def tx(p: Point) -> tuple[str, str]:
        # y grows downwards in SVG
        return _fmt((p[0] - x0 + mx) * scale), _fmt((y1 - p[1] + my) * scale)

    r = max(2.0, min(8.0, 0.12 * scale))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g stroke="#444" stroke-width="1.2" fill="none">',
    ]
    for e in sorted(d.polylines):
        pts = " ".join(",".join(tx(p)) for p in d.polylines[e])
        lines.append(f'<polyline points="{pts}"/>')
    lines.append("</g>")
    lines.append('<g stroke="#000" stroke-width="1">')
    for v in sorted(d.positions):
        x, y = tx(d.positions[v])
        fill = "#fff" if v in d.shadow_vertices else "#000"
        lines.append(f'<circle cx="{x}" cy="{y}" r="{_fmt(r)}" fill="{fill}"/>')
    lines.append("</g>")
    if label_vertices and d.labels:
        lines.append(f'<g font-family="sans-serif" font-size="{_fmt(1.6 * r)}" fill="#c00">')
        for v in sorted(d.positions):
            x, y = tx(d.positions[v])
            lines.append(f'<text x="{_fmt(float(x) + r)}" y="{_fmt(float(y) - r)}">{d.labels.get(v, v)}</text>')
        lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode()
