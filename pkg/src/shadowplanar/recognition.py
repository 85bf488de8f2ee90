"""Bipartite-cactus recognition, cycle trees and the small-shadow planarity test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import (
    Block,
    CyclePath,
    Graph,
    ThetaSubdivision,
    block_decomposition,
    find_odd_cycle,
    find_theta,
)

Node = tuple[str, int]  # ("x", cut vertex) or ("c", cycle index)


class NotCactusError(ValueError):
    def __init__(self, theta: ThetaSubdivision) -> None:
        super().__init__(f"graph is not a cactus: theta {theta.params} at u={theta.u}, v={theta.v}")
        self.theta = theta


def cycle_order(block: Block) -> tuple[int, ...]:
    """Vertices of a cycle block in traversal order, starting at the least vertex
    and heading to its smaller neighbour."""
    adj: dict[int, list[int]] = {v: [] for v in block.vertices}
    for a, b in block.edges:
        adj[a].append(b)
        adj[b].append(a)
    start = block.vertices[0]
    order = [start, min(adj[start])]
    while len(order) < len(block.vertices):
        a, b = adj[order[-1]]
        order.append(a if a != order[-2] else b)
    return tuple(order)


@dataclass(frozen=True)
class CycleTree:
    """Cut vertices and collapsed cycles of a cactus, joined as a forest."""

    cut_vertices: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[Node, Node], ...]

    @property
    def nodes(self) -> list[Node]:
        return [("x", v) for v in self.cut_vertices] + [("c", i) for i in range(len(self.cycles))]

    def is_forest(self) -> bool:
        parent = {node: node for node in self.nodes}

        def find(a: Node) -> Node:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    def to_dict(self) -> dict:
        def name(node: Node) -> str:
            return f"x{node[1]}" if node[0] == "x" else f"C{node[1]}"

        return {
            "cut_vertices": list(self.cut_vertices),
            "cycles": [list(c) for c in self.cycles],
            "edges": [[name(a), name(b)] for a, b in self.edges],
        }


def cycle_tree(g: Graph) -> CycleTree:
    theta = find_theta(g)
    if theta is not None:
        raise NotCactusError(theta)
    bd = block_decomposition(g)
    cuts = set(bd.cut_vertices)
    cycles = [cycle_order(b) for b in bd.blocks if b.is_cycle()]
    edges: list[tuple[Node, Node]] = []
    for i, cyc in enumerate(cycles):
        for a in sorted(set(cyc) & cuts):
            edges.append((("x", a), ("c", i)))
    for b in bd.blocks:
        if b.is_bridge():
            a, c = b.edges[0]
            if a in cuts and c in cuts:
                edges.append((("x", a), ("x", c)))
    edges.sort()
    return CycleTree(tuple(sorted(cuts)), tuple(cycles), tuple(edges))


@dataclass(frozen=True)
class BipartiteCactus:
    tree: CycleTree
    planar_shadow = True
    name = "BipartiteCactus"

    def certificate(self) -> dict:
        return {"cycle_tree": self.tree.to_dict()}


@dataclass(frozen=True)
class NotBipartite:
    cycle: CyclePath
    planar_shadow = False
    name = "NotBipartite"

    def certificate(self) -> dict:
        return {"odd_cycle": list(self.cycle.vertices)}


@dataclass(frozen=True)
class NotCactus:
    theta: ThetaSubdivision
    planar_shadow = False
    name = "NotCactus"

    def certificate(self) -> dict:
        t = self.theta
        return {
            "theta": {
                "u": t.u,
                "v": t.v,
                "params": list(t.params),
                "paths": [list(p) for p in t.paths()],
            }
        }


Verdict = Union[BipartiteCactus, NotBipartite, NotCactus]


def classify(g: Graph) -> Verdict:
    """Decide whether ``g`` is a bipartite cactus, with a certificate either way.

    Odd cycles are looked for first, so a theta returned in the negative
    case always has paths of equal parity.
    """
    cyc = find_odd_cycle(g)
    if cyc is not None:
        return NotBipartite(cyc)
    theta = find_theta(g)
    if theta is not None:
        return NotCactus(theta)
    return BipartiteCactus(cycle_tree(g))


def is_bipartite_cactus(g: Graph) -> bool:
    return isinstance(classify(g), BipartiteCactus)


# ---------------------------------------------------------------------------
# Small shadow planarity (block conditions)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmallShadowDecision:
    planar: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.planar


def _block_kind(b: Block) -> Optional[str]:
    nv, ne = len(b.vertices), len(b.edges)
    if nv == 2:
        return "K2"
    if nv == 3 and ne == 3:
        return "K3"
    if nv == 4 and ne == 5:
        return "K4-"
    if nv == 4 and ne == 6:
        return "K4"
    if nv == ne and nv % 2 == 0:
        degrees = {v: 0 for v in b.vertices}
        for x, y in b.edges:
            degrees[x] += 1
            degrees[y] += 1
        if all(d == 2 for d in degrees.values()):
            return "even cycle"
    return None


def small_shadow_planar(g: Graph) -> SmallShadowDecision:
    """Block-structure test for planarity of the small shadow of a connected graph."""
    if g.n < 2:
        raise ValueError("the small-shadow test needs a nontrivial graph")
    if not g.is_connected():
        raise ValueError("the small-shadow test needs a connected graph")
    bd = block_decomposition(g)
    cuts = set(bd.cut_vertices)
    for b in bd.blocks:
        if _block_kind(b) is None:
            return SmallShadowDecision(
                False, f"block on {list(b.vertices)} is not K2, K3, K4-, K4 or an even cycle"
            )
    for b in bd.blocks:
        for v in b.vertices:
            if v not in cuts:
                continue
            deg = sum(1 for e in b.edges if v in e)
            if deg > 2:
                return SmallShadowDecision(
                    False, f"cut vertex {v} has degree {deg} in block {list(b.vertices)}"
                )
    for b in bd.blocks:
        if _block_kind(b) == "K3" and all(v in cuts for v in b.vertices):
            return SmallShadowDecision(
                False, f"all three vertices of triangle {list(b.vertices)} are cut vertices"
            )
    return SmallShadowDecision(True, "every block and cut vertex meets the conditions")
