"""Great shadow, small shadow and Mycielskian of a graph.

Shadow vertices use the fixed index convention ``v' = v + n``; the
Mycielskian's central vertex is ``2n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Edge, Graph


class ShadowKind(str, Enum):
    GREAT = "great"
    SMALL = "small"
    MYCIELSKI = "mycielski"


@dataclass(frozen=True)
class ShadowGraph:
    graph: Graph
    original_order: int
    kind: ShadowKind

    def shadow(self, v: int) -> int:
        if not 0 <= v < self.original_order:
            raise IndexError(f"{v} is not an original vertex")
        return v + self.original_order

    def original_of(self, s: int) -> int:
        n = self.original_order
        if not n <= s < 2 * n:
            raise IndexError(f"{s} is not a shadow vertex")
        return s - n

    def is_shadow(self, x: int) -> bool:
        return self.original_order <= x < 2 * self.original_order

    @property
    def center(self) -> int | None:
        return 2 * self.original_order if self.kind is ShadowKind.MYCIELSKI else None

    def shadow_map(self) -> dict[int, int]:
        return {v: v + self.original_order for v in range(self.original_order)}

    def original(self) -> Graph:
        """The induced subgraph on the original indices."""
        n = self.original_order
        return Graph(n, [(u, v) for u, v in self.graph.edges if u < n and v < n])

    def label(self, x: int) -> str:
        n = self.original_order
        if x < n:
            return str(x)
        if x < 2 * n:
            return f"{x - n}'"
        return "c"


def _shadow_edges(g: Graph) -> list[Edge]:
    n = g.n
    out = list(g.edges)
    for u, v in g.edges:
        out.append((u, v + n))
        out.append((v, u + n))
    return out


def great_shadow(g: Graph) -> ShadowGraph:
    """Add ``v'`` adjacent to ``v`` and to every neighbour of ``v``."""
    n = g.n
    edges = _shadow_edges(g) + [(v, v + n) for v in range(n)]
    return ShadowGraph(Graph(2 * n, edges), n, ShadowKind.GREAT)


def small_shadow(g: Graph) -> ShadowGraph:
    """Like :func:`great_shadow` without the ``v v'`` edges."""
    return ShadowGraph(Graph(2 * g.n, _shadow_edges(g)), g.n, ShadowKind.SMALL)


def mycielskian(g: Graph) -> ShadowGraph:
    n = g.n
    c = 2 * n
    edges = _shadow_edges(g) + [(v + n, c) for v in range(n)]
    return ShadowGraph(Graph(2 * n + 1, edges), n, ShadowKind.MYCIELSKI)


def shadow(g: Graph, kind: ShadowKind | str) -> ShadowGraph:
    kind = ShadowKind(kind)
    if kind is ShadowKind.GREAT:
        return great_shadow(g)
    if kind is ShadowKind.SMALL:
        return small_shadow(g)
    return mycielskian(g)
