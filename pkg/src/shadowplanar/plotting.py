"""Matplotlib figures for drawings, witnesses and sweep reports."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Mapping, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402

from .constructions import ShadowGraph  # noqa: E402
from .render import Drawing  # noqa: E402
from .subdivision import K33Witness  # noqa: E402

# one colour per routed path, cycling if there are more
PATH_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:purple", "tab:cyan", "tab:red", "tab:olive")


def _finish(fig, out: Optional[Path | str]):
    if out is not None:
        fig.savefig(out, dpi=150, bbox_inches="tight", metadata={"Software": None} if str(out).endswith(".png") else None)
        plt.close(fig)
    return fig


def plot_drawing(d: Drawing, out: Optional[Path | str] = None, title: str = "", labels: bool = True):
    size = 6.0
    fig, ax = plt.subplots(figsize=(size, size))
    segs = [pts for _, pts in sorted(d.polylines.items())]
    ax.add_collection(LineCollection(segs, colors="0.35", linewidths=0.9, zorder=1))
    orig = [p for v, p in sorted(d.positions.items()) if v not in d.shadow_vertices]
    shad = [p for v, p in sorted(d.positions.items()) if v in d.shadow_vertices]
    if orig:
        ax.scatter(*zip(*orig), s=28, c="black", zorder=2)
    if shad:
        ax.scatter(*zip(*shad), s=28, c="white", edgecolors="black", linewidths=0.9, zorder=2)
    if labels and len(d.positions) <= 80:
        for v, (x, y) in sorted(d.positions.items()):
            ax.annotate(d.labels.get(v, str(v)), (x, y), xytext=(3, 3), textcoords="offset points", fontsize=7)
    ax.set_aspect("equal")
    ax.autoscale()
    ax.margins(0.05)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    return _finish(fig, out)


def ring_positions(sg: ShadowGraph) -> dict[int, tuple[float, float]]:
    """Originals on an inner ring, shadows on an outer ring at the same angles."""
    n = sg.original_order
    pos = {}
    for v in range(n):
        t = 2 * math.pi * v / max(n, 1) + math.pi / 2
        pos[v] = (math.cos(t), math.sin(t))
        pos[v + n] = (1.8 * math.cos(t), 1.8 * math.sin(t))
    if sg.center is not None:
        pos[sg.center] = (0.0, 0.0)
    return pos


def plot_witness(
    sg: ShadowGraph,
    w: K33Witness,
    out: Optional[Path | str] = None,
    positions: Optional[Mapping[int, tuple[float, float]]] = None,
    title: str = "",
):
    """Shadow graph in grey with the K3,3 subdivision highlighted path by path."""
    pos = dict(positions) if positions is not None else ring_positions(sg)
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.add_collection(
        LineCollection([(pos[u], pos[v]) for u, v in sg.graph.edges], colors="0.8", linewidths=0.8, zorder=1)
    )
    for i, path in enumerate(w.paths):
        color = "black" if len(path) == 2 else PATH_COLORS[i % len(PATH_COLORS)]
        ax.add_collection(
            LineCollection([(pos[a], pos[b]) for a, b in zip(path, path[1:])], colors=color, linewidths=2.0, zorder=2)
        )
    for v, (x, y) in sorted(pos.items()):
        face = "white" if sg.is_shadow(v) else "black"
        edge = "black"
        if v in w.delta1:
            face, edge = "tab:red", "tab:red"
        elif v in w.delta2:
            face, edge = "tab:blue", "tab:blue"
        ax.scatter([x], [y], s=40, c=face, edgecolors=edge, zorder=3)
        ax.annotate(sg.label(v), (x, y), xytext=(4, 4), textcoords="offset points", fontsize=8)
    ax.set_aspect("equal")
    ax.autoscale()
    ax.margins(0.08)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    return _finish(fig, out)


def plot_sweep(rows: Sequence[Mapping[str, int]], out: Optional[Path | str] = None):
    """Stacked bars of connected graphs per order, split by verdict."""
    orders = [r["n"] for r in rows]
    planar = [r["planar"] for r in rows]
    nonplanar = [r["graphs"] - r["planar"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(orders, planar, color="tab:green", label="bipartite cactus (planar shadow)")
    ax.bar(orders, nonplanar, bottom=planar, color="tab:gray", label="other (non-planar shadow)")
    ax.set_yscale("log")
    ax.set_xlabel("order n")
    ax.set_ylabel("connected graphs")
    ax.legend(frameon=False)
    return _finish(fig, out)
