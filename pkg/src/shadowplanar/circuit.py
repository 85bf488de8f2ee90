"""Keyboard matrices driven by one microcontroller, and their single-sided routability.

Each pin v is a vertex and each switch (with its diode) joins two pins. To
catch key presses without polling, every pin gets an intermediate node v'
wired to v through a diode and to each neighbour of v through a switch and
diode. That circuit graph is exactly the great shadow of the pin graph, so
the board can be routed on one layer precisely when the pin graph is a
bipartite cactus.

Matrix files::

    pins=3
    0 -> 1 A
    1 -> 0 B
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .constructions import ShadowGraph, great_shadow
from .embedding import RotationSystem, embed_shadow
from .graph import Graph
from .recognition import BipartiteCactus, NotBipartite, Verdict, classify
from .render import Drawing, render_shadow
from .subdivision import K33Witness
from .witness import k33_from_odd_cycle, k33_from_theta

INTERRUPT_NOTE = (
    "Edges from each intermediate node v' to a shared interrupt pin are omitted: "
    "several interrupt pins can be used instead, so they do not affect routability."
)


class MatrixError(ValueError):
    """Invalid keyboard matrix."""


@dataclass(frozen=True)
class Switch:
    anode: int
    cathode: int
    label: Optional[str] = None


@dataclass(frozen=True)
class KeyboardMatrix:
    """Pins ``0..pins-1`` and directed switches between them.

    A pair of pins carries at most two switches, one in each direction.
    Direction is kept for the record; routability only sees the pin graph.
    """

    pins: int
    switches: tuple[Switch, ...]

    def __post_init__(self) -> None:
        if self.pins < 1:
            raise MatrixError(f"pin count must be positive, got {self.pins}")
        seen: dict[tuple[int, int], int] = {}
        directed = set()
        for s in self.switches:
            for p in (s.anode, s.cathode):
                if not 0 <= p < self.pins:
                    raise MatrixError(f"pin {p} out of range 0..{self.pins - 1}")
            if s.anode == s.cathode:
                raise MatrixError(f"switch joins pin {s.anode} to itself")
            pair = (min(s.anode, s.cathode), max(s.anode, s.cathode))
            if seen.get(pair, 0) >= 2:
                raise MatrixError(f"more than two switches on pins {pair[0]} and {pair[1]}")
            if (s.anode, s.cathode) in directed:
                raise MatrixError(f"duplicate switch {s.anode} -> {s.cathode}")
            seen[pair] = seen.get(pair, 0) + 1
            directed.add((s.anode, s.cathode))
        if len(self.switches) > self.capacity:  # pragma: no cover - implied by the checks above
            raise MatrixError("more switches than n(n-1)")

    @property
    def capacity(self) -> int:
        return self.pins * (self.pins - 1)

    @property
    def graph(self) -> Graph:
        return Graph(self.pins, {(min(s.anode, s.cathode), max(s.anode, s.cathode)) for s in self.switches})

    @classmethod
    def from_pairs(cls, pins: int, pairs) -> KeyboardMatrix:
        return cls(pins, tuple(Switch(a, c) for a, c in pairs))


def parse_matrix(text: str) -> KeyboardMatrix:
    """Parse ``pins=<n>`` followed by ``anode -> cathode [label]`` lines."""
    pins = None
    switches = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if pins is None:
            key, sep, value = line.partition("=")
            if not sep or key.strip() != "pins":
                raise MatrixError(f"line {lineno}: expected header 'pins=<n>'")
            try:
                pins = int(value)
            except ValueError:
                raise MatrixError(f"line {lineno}: bad pin count {value.strip()!r}") from None
            continue
        left, arrow, right = line.partition("->")
        rest = right.split(None, 1)
        if not arrow or not rest:
            raise MatrixError(f"line {lineno}: expected 'anode -> cathode [label]'")
        try:
            anode, cathode = int(left), int(rest[0])
        except ValueError:
            raise MatrixError(f"line {lineno}: pins must be integers") from None
        label = rest[1].strip() if len(rest) > 1 else None
        if label and label.startswith("[") and label.endswith("]"):
            label = label[1:-1].strip()
        switches.append(Switch(anode, cathode, label or None))
    if pins is None:
        raise MatrixError("missing header 'pins=<n>'")
    return KeyboardMatrix(pins, tuple(switches))


def interrupt_expansion(k: KeyboardMatrix) -> ShadowGraph:
    """The circuit graph with intermediate interrupt nodes: the great shadow of the pin graph."""
    return great_shadow(k.graph)


def node_roles(sg: ShadowGraph) -> dict[int, str]:
    n = sg.original_order
    return {x: ("pin" if x < n else "intermediate") for x in range(2 * n)}


def edge_roles(sg: ShadowGraph) -> dict[tuple[int, int], str]:
    """``switch`` between pins, ``diode`` for v-v', ``switch+diode`` from v' to a neighbour of v."""
    n = sg.original_order
    out = {}
    for u, v in sg.graph.edges:
        if v < n:
            out[u, v] = "switch"
        elif v - n == u:
            out[u, v] = "diode"
        else:
            out[u, v] = "switch+diode"
    return out


def describe_node(sg: ShadowGraph, x: int) -> str:
    if sg.is_shadow(x):
        return f"intermediate({sg.original_of(x)})"
    return f"pin {x}"


@dataclass(frozen=True)
class RoutabilityReport:
    matrix: KeyboardMatrix
    verdict: Verdict
    embedding: Optional[RotationSystem] = None
    drawing: Optional[Drawing] = None
    witness: Optional[K33Witness] = None
    note: str = INTERRUPT_NOTE

    @property
    def routable(self) -> bool:
        return isinstance(self.verdict, BipartiteCactus)

    def statistics(self) -> dict:
        k = self.matrix
        return {
            "pins": k.pins,
            "switches": len(k.switches),
            "wired_pairs": k.graph.m,
            "capacity": k.capacity,
            "fill": round(len(k.switches) / k.capacity, 6) if k.capacity else 0.0,
        }

    def offending_pins(self) -> list[int]:
        if self.witness is None:
            return []
        n = self.matrix.pins
        return sorted({x % n for x in self.witness.vertices()})

    def to_dict(self) -> dict:
        cert: dict[str, object] = {"kind": self.verdict.name, **self.verdict.certificate()}
        if self.embedding is not None:
            cert["embedding"] = self.embedding.to_dict()
        if self.witness is not None:
            sg = interrupt_expansion(self.matrix)
            w = self.witness
            cert["witness"] = {
                **w.to_dict(),
                "delta1_nodes": [describe_node(sg, x) for x in w.delta1],
                "delta2_nodes": [describe_node(sg, x) for x in w.delta2],
                "pins": self.offending_pins(),
            }
        return {
            "verdict": "routable" if self.routable else "not routable",
            "routable": self.routable,
            "statistics": self.statistics(),
            "certificate": cert,
            "note": self.note,
        }


def routability_report(k: Union[KeyboardMatrix, str], draw: bool = True) -> RoutabilityReport:
    """Decide single-sided routability with an embedding or a K3,3 witness."""
    if isinstance(k, str):
        k = parse_matrix(k)
    g = k.graph
    verdict = classify(g)
    if isinstance(verdict, BipartiteCactus):
        rs = embed_shadow(g, verdict)
        drawing = render_shadow(g, verdict) if draw else None
        return RoutabilityReport(k, verdict, embedding=rs, drawing=drawing)
    sg = interrupt_expansion(k)
    if isinstance(verdict, NotBipartite):
        w = k33_from_odd_cycle(sg, verdict.cycle)
    else:
        w = k33_from_theta(sg, verdict.theta)
    return RoutabilityReport(k, verdict, witness=w)
