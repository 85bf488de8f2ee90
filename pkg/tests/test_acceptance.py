"""Acceptance criteria 1-7, one test each.

Every test prints a single ``PASS``/``FAIL`` line; the lines are also
repeated in the terminal summary (see conftest.py). Tolerances are pinned
below and never loosened per case.
"""

import random
import re
import time
from itertools import combinations, product

from shadowplanar.circuit import KeyboardMatrix, interrupt_expansion, parse_matrix, routability_report
from shadowplanar.constructions import great_shadow, mycielskian, small_shadow
from shadowplanar.embedding import draw_even_cycle_shadow, embed_shadow
from shadowplanar.generators import cycle_graph, random_bipartite_cactus, random_tree, theta_graph
from shadowplanar.geometry import count_crossings
from shadowplanar.graph import CyclePath, Graph
from shadowplanar.oracle import CONNECTED_GRAPH_COUNTS, equivalence_sweep, is_planar, small_shadow_sweep
from shadowplanar.render import render_layout, render_shadow
from shadowplanar.subdivision import validate_k33
from shadowplanar.witness import k33_from_odd_cycle, k33_from_theta

CROSSING_TOL = 1e-9  # drawing units
SWEEP_MAX_N = 7
SWEEP_TIME_LIMIT = 60.0  # seconds
SEED = 20240611

RESULTS: list[str] = []


def report(number: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_equivalence_sweep():
    t0 = time.perf_counter()
    r = equivalence_sweep(SWEEP_MAX_N, strict=False)
    dt = time.perf_counter() - t0
    counts = [row.graphs for row in r.rows]
    ok = (
        not r.discrepancies
        and not r.edge_law_failures
        and counts == list(CONNECTED_GRAPH_COUNTS[:SWEEP_MAX_N])
        and dt < SWEEP_TIME_LIMIT
    )
    report(
        1,
        ok,
        f"{r.total} connected graphs with n <= {SWEEP_MAX_N} (per order {counts}), "
        f"{len(r.discrepancies)} discrepancies, {dt:.1f}s",
    )


def test_2_size_laws():
    rng = random.Random(SEED)
    bad = []
    for i in range(1000):
        n = rng.randint(1, 50)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < rng.choice((0.02, 0.1, 0.3))])
        S, s, mu = great_shadow(g).graph, small_shadow(g).graph, mycielskian(g).graph
        if not (
            (S.n, S.m) == (2 * n, 3 * g.m + n) and (s.n, s.m) == (2 * n, 3 * g.m) and (mu.n, mu.m) == (2 * n + 1, 3 * g.m + n)
        ):
            bad.append(i)
    report(2, not bad, f"1000 random graphs (n <= 50): {len(bad)} violate |V|, |E| laws for S, s, mu")


def test_3_witness_soundness():
    failures = []
    for k in (3, 5, 7, 9, 11):
        sg = great_shadow(cycle_graph(k))
        ok, why = validate_k33(sg.graph, k33_from_odd_cycle(sg, CyclePath(tuple(range(k)))))
        if not ok:
            failures.append(f"C{k}: {why}")
    thetas = list(product((2, 4, 6), repeat=3)) + list(product((3, 5), (3, 5, 7), (1, 3, 5)))
    thetas += [(1, 3, 1), (1, 5, 1)]
    for params in thetas:
        g, th = theta_graph(*params)
        sg = great_shadow(g)
        ok, why = validate_k33(sg.graph, k33_from_theta(sg, th))
        if not ok:
            failures.append(f"theta{params}: {why}")
    sg = great_shadow(cycle_graph(3))
    w = k33_from_odd_cycle(sg, CyclePath((0, 1, 2)))
    if {frozenset(w.delta1), frozenset(w.delta2)} != {frozenset({0, 1, 2}), frozenset({3, 4, 5})}:
        failures.append("C3 witness does not split originals from shadows")
    report(
        3,
        not failures,
        f"5 odd cycles, {len(thetas)} thetas (incl. fallbacks (1,3,1), (1,5,1)), C3 partition; failures: {failures or 'none'}",
    )


def test_4_drawing_soundness():
    cycle_bad = []
    for k in range(4, 41, 2):
        layout = draw_even_cycle_shadow(k)
        if layout.crossings(CROSSING_TOL) or render_layout(layout).crossings(CROSSING_TOL):
            cycle_bad.append(k)
    rng = random.Random(SEED)
    euler_bad = render_bad = 0
    sizes = []
    for _ in range(500):
        g = random_bipartite_cactus(rng.randint(1, 60), rng)
        sizes.append(g.n)
        rs = embed_shadow(g)
        if rs.euler_characteristics() != [2] or rs.to_graph(2 * g.n) != great_shadow(g).graph:
            euler_bad += 1
        if render_shadow(g, check=False).crossings(CROSSING_TOL):
            render_bad += 1
    ok = not cycle_bad and euler_bad == 0 and render_bad == 0
    report(
        4,
        ok,
        f"even cycles 4..40: {len(cycle_bad)} with crossings; 500 random bipartite cacti (n <= {max(sizes)}): "
        f"{euler_bad} Euler failures, {render_bad} drawings with crossings (tol {CROSSING_TOL:g})",
    )


def test_5_small_shadow_cross_check():
    r = small_shadow_sweep(SWEEP_MAX_N)
    report(5, r.ok, f"{r.total} connected graphs with 2 <= n <= {SWEEP_MAX_N}, {len(r.discrepancies)} discrepancies")


def _svg_crossings(svg: str) -> int:
    segs, ids, names = [], [], {}
    for m in re.finditer(r'<polyline points="([^"]+)"/>', svg):
        pts = [tuple(map(float, p.split(","))) for p in m.group(1).split()]
        for a, b in zip(pts, pts[1:]):
            segs.append((a, b))
            ids.append((names.setdefault(a, len(names)), names.setdefault(b, len(names))))
    return len(count_crossings(segs, ids, CROSSING_TOL))


def test_6_circuit_application():
    notes = []
    ch = routability_report(parse_matrix("pins=3\n0 -> 1\n1 -> 0\n1 -> 2\n2 -> 1\n0 -> 2\n2 -> 0\n"))
    ch_ok = (
        not ch.routable
        and ch.witness is not None
        and validate_k33(interrupt_expansion(ch.matrix).graph, ch.witness)[0]
    )
    notes.append(f"Charlieplex-3 {'not routable, witness valid' if ch_ok else 'WRONG'}")
    c4 = routability_report(parse_matrix("pins=5\n0 -> 1\n1 -> 2\n2 -> 3\n3 -> 0\n0 -> 4\n"))
    svg = c4.drawing.to_svg().decode() if c4.drawing is not None else ""
    c4_ok = c4.routable and bool(svg) and _svg_crossings(svg) == 0
    notes.append(f"C4+pendant {'routable, SVG crossing-free' if c4_ok else 'WRONG'}")
    rng = random.Random(SEED)
    tree_bad = 0
    for _ in range(100):
        t = random_tree(rng.randint(1, 30), rng)
        k = KeyboardMatrix.from_pairs(t.n, t.edges)
        r = routability_report(k, draw=False)
        if not r.routable or (t.n <= 15 and not is_planar(interrupt_expansion(k).graph)):
            tree_bad += 1
    notes.append(f"100 tree wirings, {tree_bad} not routable")
    report(6, ch_ok and c4_ok and tree_bad == 0, "; ".join(notes))


def test_7_monotonicity():
    rng = random.Random(SEED)
    bad = 0
    for _ in range(500):
        n = rng.randint(1, 30)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.25])
        h = g.edge_subgraph([e for e in g.edges if rng.random() < 0.5])
        if not set(great_shadow(h).graph.edges) <= set(great_shadow(g).graph.edges):
            bad += 1
    report(7, bad == 0, f"500 random pairs H <= G, {bad} with E(S(H)) not inside E(S(G))")
