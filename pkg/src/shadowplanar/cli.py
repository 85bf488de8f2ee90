"""Command-line front end.

Exit codes: 0 success, 1 domain-negative answer (not a bipartite cactus, no
witness, not routable, sweep discrepancy), 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from .circuit import MatrixError, parse_matrix, routability_report
from .constructions import ShadowKind, shadow
from .embedding import embed_shadow
from .formats import FormatError, read_graph, to_edge_list
from .generators import random_connected_graph
from .graph import Graph, GraphError
from .oracle import DEFAULT_SWEEP_LIMIT, equivalence_sweep, read_graph6, small_shadow_sweep
from .recognition import BipartiteCactus, classify, small_shadow_planar
from .render import render_shadow
from .witness import shadow_witness

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write(path: str, data) -> None:
    try:
        if isinstance(data, bytes):
            Path(path).write_bytes(data)
        else:
            Path(path).write_text(data)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _load(path: str) -> Graph:
    try:
        return read_graph(path)
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


class _Out:
    """Collects the JSON document and the pretty summary; prints one of them."""

    def __init__(self, fmt: str) -> None:
        self.fmt = fmt

    def emit(self, doc: dict, pretty: Sequence[str]) -> None:
        if self.fmt == "pretty":
            sys.stdout.write("".join(line + "\n" for line in pretty))
        else:
            sys.stdout.write(_dump(doc))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_shadow(args, out: _Out) -> int:
    g = _load(args.graph)
    sg = shadow(g, args.kind)
    if args.edge_list:
        lines = [f"# {args.kind} shadow of a graph on {g.n} vertices; v' = v + {g.n}"]
        if sg.center is not None:
            lines.append(f"# centre vertex {sg.center}")
        sys.stdout.write("\n".join(lines) + "\n" + to_edge_list(sg.graph))
        return EXIT_OK
    doc = {
        "kind": sg.kind.value,
        "original_order": g.n,
        "n": sg.graph.n,
        "edges": [list(e) for e in sg.graph.edges],
        "shadow_map": {str(v): s for v, s in sg.shadow_map().items()},
        "center": sg.center,
    }
    out.emit(doc, [f"{sg.kind.value} shadow: {sg.graph.n} vertices, {sg.graph.m} edges"])
    return EXIT_OK


def cmd_check(args, out: _Out) -> int:
    g = _load(args.graph)
    if args.small_shadow:
        try:
            d = small_shadow_planar(g)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        out.emit(
            {"test": "small_shadow", "planar": d.planar, "reason": d.reason},
            [f"small shadow planar: {'yes' if d.planar else 'no'} ({d.reason})"],
        )
        return EXIT_OK if d.planar else EXIT_NEGATIVE
    v = classify(g)
    doc = {"verdict": v.name, "planar_shadow": v.planar_shadow, "certificate": v.certificate()}
    out.emit(doc, [f"verdict: {v.name}", f"great shadow planar: {'yes' if v.planar_shadow else 'no'}"])
    return EXIT_OK if v.planar_shadow else EXIT_NEGATIVE


def cmd_witness(args, out: _Out) -> int:
    g = _load(args.graph)
    w = shadow_witness(g)
    if w is None:
        out.emit({"planar": True, "witness": None}, ["great shadow is planar: no witness"])
        return EXIT_NEGATIVE
    if args.figure:
        from .constructions import great_shadow
        from .plotting import plot_witness

        plot_witness(great_shadow(g), w, args.figure)
    out.emit(
        {"planar": False, "witness": w.to_dict()},
        [
            f"K3,3 subdivision: {' '.join(map(str, w.delta1))} | {' '.join(map(str, w.delta2))}",
            *(" - ".join(map(str, p)) for p in w.paths),
        ],
    )
    return EXIT_OK


def cmd_draw(args, out: _Out) -> int:
    g = _load(args.graph)
    v = classify(g)
    if not isinstance(v, BipartiteCactus):
        print(f"not drawable: {v.name}, the great shadow is not planar", file=sys.stderr)
        out.emit({"verdict": v.name, "certificate": v.certificate()}, [f"verdict: {v.name}"])
        return EXIT_NEGATIVE
    rs = embed_shadow(g, v)
    d = render_shadow(g, v)
    _write(args.out, d.to_svg())
    if args.json:
        _write(args.json, _dump(rs.to_dict()))
    if args.figure:
        from .plotting import plot_drawing

        plot_drawing(d, args.figure)
    faces = len(rs.faces)
    doc = {
        "svg": args.out,
        "vertices": rs.order,
        "edges": len(rs.edges()),
        "faces": faces,
        "euler": rs.euler_characteristics(),
        "crossings": len(d.crossings()),
    }
    out.emit(doc, [f"wrote {args.out}: {rs.order} vertices, {len(rs.edges())} edges, {faces} faces, 0 crossings"])
    return EXIT_OK


def _random_graphs(count: int, max_n: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(1, max_n), rng.choice((0.0, 0.05, 0.15)), rng) for _ in range(count)]


def cmd_verify(args, out: _Out) -> int:
    limit = args.max_size if args.max_size is not None else DEFAULT_SWEEP_LIMIT
    if args.max_n < 1:
        raise InputError("--max-n must be at least 1")
    if args.small_shadow:
        if args.max_n > limit:
            raise InputError(f"--max-n {args.max_n} exceeds --max-size {limit}")
        report = small_shadow_sweep(args.max_n, workers=args.workers)
    else:
        graphs = None
        if args.g6:
            try:
                graphs = list(read_graph6(args.g6))
            except (OSError, ValueError, GraphError) as exc:
                raise InputError(f"{args.g6}: {exc}") from None
        elif args.random:
            graphs = _random_graphs(args.random, args.max_n, args.seed)
        try:
            report = equivalence_sweep(args.max_n, graphs=graphs, workers=args.workers, limit=limit, strict=False)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    doc = report.to_dict()
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "graphs", "planar", report.predicate])
        for r in report.rows:
            w.writerow([r.n, r.graphs, r.planar, r.predicted])
        _write(args.csv, buf.getvalue())
    if args.figure:
        from .plotting import plot_sweep

        plot_sweep([{"n": r.n, "graphs": r.graphs, "planar": r.planar} for r in report.rows], args.figure)
    pretty = [f"{'n':>3} {'graphs':>8} {'planar':>8} {report.predicate:>18}"]
    pretty += [f"{r.n:>3} {r.graphs:>8} {r.planar:>8} {r.predicted:>18}" for r in report.rows]
    pretty.append(f"total {report.total}, discrepancies {len(report.discrepancies)}")
    out.emit(doc, pretty)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_keyboard(args, out: _Out) -> int:
    try:
        text = Path(args.matrix).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.matrix}: {exc.strerror}") from None
    try:
        k = parse_matrix(text)
    except MatrixError as exc:
        raise InputError(f"{args.matrix}: {exc}") from None
    rep = routability_report(k, draw=True)
    doc = rep.to_dict()
    if rep.drawing is not None and args.svg:
        _write(args.svg, rep.drawing.to_svg())
        doc["svg"] = args.svg
    _write(args.out, _dump(doc))
    stats = doc["statistics"]
    pretty = [
        f"{doc['verdict']}: {stats['pins']} pins, {stats['switches']} switches ({stats['fill']:.1%} of n(n-1))",
        rep.note,
    ]
    if not rep.routable:
        pretty.insert(1, f"offending pins: {' '.join(map(str, rep.offending_pins()))}")
    out.emit(doc, pretty)
    return EXIT_OK if rep.routable else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("json", "pretty"), default=d if suppress else "json")
    p.add_argument("--seed", type=int, default=d if suppress else 0, help="seed for randomized drivers")
    p.add_argument("--max-size", type=int, default=d, help="bound for brute-force enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shadowplanar", description="Great-shadow planarity: recognition, witnesses, drawings.")
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _globals(p, suppress=True)
        return p

    p = add("shadow", "build S(G), s(G) or the Mycielskian")
    p.add_argument("graph")
    p.add_argument("--kind", choices=[k.value for k in ShadowKind], default="great")
    p.add_argument("--edge-list", action="store_true", help="print an edge list instead of JSON")
    p.set_defaults(func=cmd_shadow)

    p = add("check", "is G a bipartite cactus (is S(G) planar)?")
    p.add_argument("graph")
    p.add_argument("--small-shadow", action="store_true", help="test planarity of s(G) instead")
    p.set_defaults(func=cmd_check)

    p = add("witness", "K3,3 subdivision in S(G)")
    p.add_argument("graph")
    p.add_argument("--figure", help="PNG of the highlighted witness")
    p.set_defaults(func=cmd_witness)

    p = add("draw", "crossing-free drawing of S(G)")
    p.add_argument("graph")
    p.add_argument("--out", required=True, help="SVG output")
    p.add_argument("--json", help="embedding (rotation system) output")
    p.add_argument("--figure", help="PNG rendering of the same drawing")
    p.set_defaults(func=cmd_draw)

    p = add("verify", "compare the structural tests with an independent planarity oracle")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--g6", help="graph6 file to check instead of the built-in enumeration")
    p.add_argument("--random", type=int, default=0, help="check this many random graphs with n <= max-n")
    p.add_argument("--small-shadow", action="store_true", help="check the small-shadow block test")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="per-order counts as CSV")
    p.add_argument("--figure", help="PNG bar chart of the counts")
    p.set_defaults(func=cmd_verify)

    p = add("keyboard", "single-sided routability of a keyboard matrix")
    p.add_argument("matrix")
    p.add_argument("--out", required=True, help="JSON report output")
    p.add_argument("--svg", help="layout SVG when routable")
    p.set_defaults(func=cmd_keyboard)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, _Out(args.format))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
