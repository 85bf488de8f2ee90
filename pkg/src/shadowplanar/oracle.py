"""Independent planarity oracle, graph enumeration and the equivalence sweep.

Nothing here calls the recognition, witness or embedding code except the
sweep itself, which compares their verdict against the oracle.
"""

from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence, Union

import networkx as nx

from .graph import Graph
from .subdivision import K5Witness, K33Witness

DEFAULT_SWEEP_LIMIT = 8

# connected graphs on n unlabelled vertices, n = 1..8
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(index), [(index[u], index[v]) for u, v in h.edges if u != v])


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return nx.check_planarity(to_networkx(g))[0]


class OracleBoundExceeded(RuntimeError):
    pass


def kuratowski_witness(g: Graph, max_order: Optional[int] = None) -> Optional[Union[K33Witness, K5Witness]]:
    """A validated K3,3 or K5 subdivision in ``g``, or ``None`` if ``g`` is planar."""
    if max_order is not None and g.n > max_order:
        raise OracleBoundExceeded(f"order {g.n} exceeds bound {max_order}")
    planar, sub = nx.check_planarity(to_networkx(g), counterexample=True)
    if planar:
        return None
    w = _subdivision_from(sub)
    reason = w.violation(g)
    if reason is not None:  # pragma: no cover
        raise AssertionError(f"extracted Kuratowski subgraph is malformed: {reason}")
    return w


def _subdivision_from(h: nx.Graph) -> Union[K33Witness, K5Witness]:
    branch = sorted(v for v in h.nodes if h.degree(v) >= 3)
    bset = set(branch)
    paths: dict[tuple[int, int], list[int]] = {}
    for b in branch:
        for w in sorted(h.neighbors(b)):
            path = [b, w]
            while path[-1] not in bset:
                nxt = [x for x in h.neighbors(path[-1]) if x != path[-2]]
                path.append(nxt[0])
            key = (b, path[-1])
            if (key[1], key[0]) not in paths:
                paths[key] = path
    if len(branch) == 5:
        ordered = []
        for i, a in enumerate(branch):
            for c in branch[i + 1 :]:
                ordered.append(tuple(paths[a, c]) if (a, c) in paths else tuple(reversed(paths[c, a])))
        return K5Witness(tuple(branch), tuple(ordered))
    # K3,3: split the branch vertices by 2-colouring the contracted graph
    contracted: dict[int, set[int]] = {b: set() for b in branch}
    for a, c in paths:
        contracted[a].add(c)
        contracted[c].add(a)
    side = {branch[0]: 0}
    queue = deque([branch[0]])
    while queue:
        x = queue.popleft()
        for y in contracted[x]:
            if y not in side:
                side[y] = 1 - side[x]
                queue.append(y)
    d1 = tuple(b for b in branch if side[b] == 0)
    d2 = tuple(b for b in branch if side[b] == 1)
    return K33Witness.from_mapping(d1, d2, paths)


# ---------------------------------------------------------------------------
# Enumeration of connected graphs up to isomorphism
# ---------------------------------------------------------------------------


def _refine(n: int, adj: Sequence[int]) -> list[int]:
    """Stable colour refinement starting from degrees."""
    colors = [bin(adj[v]).count("1") for v in range(n)]
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[w] for w in range(n) if adj[v] >> w & 1)))
            for v in range(n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_code(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant code: best adjacency word over refined labellings."""
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    colors = _refine(n, adj)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    best = -1
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for cell in choice for v in cell]
        code = 0
        for i, j in pairs:
            code = (code << 1) | (adj[order[i]] >> order[j] & 1)
        if code > best:
            best = code
    return (n, best)


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism.

    Grown one vertex at a time: every connected graph has a vertex whose
    removal leaves it connected, so attaching a new vertex to every
    non-empty subset of every smaller representative reaches all classes;
    duplicates are removed by canonical code.
    """
    if n < 1:
        return []
    level = {canonical_code(Graph(1)): Graph(1)}
    for k in range(2, n + 1):
        nxt: dict[tuple[int, int], Graph] = {}
        for g in level.values():
            base = list(g.edges)
            for mask in range(1, 1 << (k - 1)):
                h = Graph(k, base + [(i, k - 1) for i in range(k - 1) if mask >> i & 1])
                code = canonical_code(h)
                if code not in nxt:
                    nxt[code] = h
        level = nxt
    return [level[c] for c in sorted(level)]


def read_graph6(path: Union[str, Path]) -> Iterator[Graph]:
    for line in Path(path).read_bytes().splitlines():
        line = line.strip()
        # optional header, glued to the first graph
        if line.startswith(b">>graph6<<"):
            line = line[len(b">>graph6<<") :]
        if not line:
            continue
        yield from_networkx(nx.from_graph6_bytes(line))


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------


@dataclass
class SweepRow:
    n: int
    graphs: int = 0
    planar: int = 0
    predicted: int = 0


@dataclass
class SweepReport:
    """Per-order counts: graphs seen, oracle-planar shadows, and graphs the
    structural test (``predicate``) predicts to be planar."""

    predicate: str
    rows: list[SweepRow] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)
    edge_law_failures: list[dict] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(r.graphs for r in self.rows)

    @property
    def ok(self) -> bool:
        return not self.discrepancies and not self.edge_law_failures

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "predicate": self.predicate,
            "rows": [
                {"n": r.n, "graphs": r.graphs, "planar": r.planar, self.predicate: r.predicted} for r in self.rows
            ],
            "discrepancies": self.discrepancies,
            "edge_law_failures": self.edge_law_failures,
            "ok": self.ok,
        }


class SweepDiscrepancy(AssertionError):
    def __init__(self, report: SweepReport) -> None:
        super().__init__(json.dumps(report.discrepancies[:5]))
        self.report = report


def _check_one(g: Graph) -> tuple[int, bool, bool, bool]:
    from .constructions import great_shadow
    from .recognition import is_bipartite_cactus

    sg = great_shadow(g).graph
    law = sg.n == 2 * g.n and sg.m == 3 * g.m + g.n
    return g.n, is_planar(sg), is_bipartite_cactus(g), law


def _check_small(g: Graph) -> tuple[int, bool, bool]:
    from .constructions import small_shadow
    from .recognition import small_shadow_planar

    return g.n, is_planar(small_shadow(g).graph), small_shadow_planar(g).planar


def _graphs_up_to(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in connected_graphs(n)]


def _run(fn, graphs: list[Graph], workers: int) -> list:
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, graphs, chunksize=64))
    return [fn(g) for g in graphs]


def equivalence_sweep(
    max_n: int = 7,
    graphs: Optional[Iterable[Graph]] = None,
    workers: int = 1,
    limit: int = DEFAULT_SWEEP_LIMIT,
    strict: bool = True,
) -> SweepReport:
    """Compare oracle planarity of S(G) with the bipartite-cactus verdict.

    Uses every connected graph with at most ``max_n`` vertices unless an
    explicit stream is given. With ``strict`` any disagreement raises
    :class:`SweepDiscrepancy` carrying the report.
    """
    if graphs is None:
        if max_n > limit:
            raise ValueError(f"max_n={max_n} exceeds the configured limit {limit}")
        graphs = _graphs_up_to(max_n)
    graphs = list(graphs)
    results = _run(_check_one, graphs, workers)
    rows: dict[int, SweepRow] = {}
    report = SweepReport("bipartite_cactus")
    for g, (n, planar, cactus, law) in zip(graphs, results):
        row = rows.setdefault(n, SweepRow(n))
        row.graphs += 1
        row.planar += planar
        row.predicted += cactus
        if planar != cactus:
            report.discrepancies.append(
                {"n": g.n, "edges": [list(e) for e in g.edges], "oracle_planar": planar, "bipartite_cactus": cactus}
            )
        if not law:
            report.edge_law_failures.append({"n": g.n, "edges": [list(e) for e in g.edges]})
    report.rows = [rows[k] for k in sorted(rows)]
    report.discrepancies.sort(key=lambda d: (d["n"], d["edges"]))
    if strict and report.discrepancies:
        raise SweepDiscrepancy(report)
    return report


def small_shadow_sweep(max_n: int = 7, workers: int = 1) -> SweepReport:
    """Compare oracle planarity of s(G) with the block-condition test, 2 <= n <= max_n."""
    graphs = _graphs_up_to(max_n, min_n=2)
    results = _run(_check_small, graphs, workers)
    rows: dict[int, SweepRow] = {}
    report = SweepReport("block_conditions")
    for g, (n, planar, predicted) in zip(graphs, results):
        row = rows.setdefault(n, SweepRow(n))
        row.graphs += 1
        row.planar += planar
        row.predicted += predicted
        if planar != predicted:
            report.discrepancies.append(
                {"n": g.n, "edges": [list(e) for e in g.edges], "oracle_planar": planar, "predicted": predicted}
            )
    report.rows = [rows[k] for k in sorted(rows)]
    report.discrepancies.sort(key=lambda d: (d["n"], d["edges"]))
    return report
