"""Reading and writing graphs as edge-list text or JSON.

Edge-list text::

    # comment
    n=4
    0 1
    1 2

JSON: ``{"n": 4, "edges": [[0, 1], [1, 2]]}``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .graph import Graph, GraphError


class FormatError(ValueError):
    """Malformed graph file."""


def parse_edge_list(text: str) -> Graph:
    order = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            key, sep, value = line.partition("=")
            if not sep or key.strip() != "n":
                raise FormatError(f"line {lineno}: expected header 'n=<order>', got {raw.strip()!r}")
            try:
                order = int(value)
            except ValueError:
                raise FormatError(f"line {lineno}: bad order {value.strip()!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {raw.strip()!r}") from None
    if order is None:
        raise FormatError("missing header 'n=<order>'")
    try:
        return Graph(order, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise FormatError('expected an object with keys "n" and "edges"')
    n, edges = data["n"], data["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise FormatError('"n" must be an integer')
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        for e in edges
    ):
        raise FormatError('"edges" must be a list of [u, v] integer pairs')
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def parse_graph(text: str) -> Graph:
    """Either format, chosen by the first non-blank character."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_edge_list(text)


def read_graph(path: Union[str, Path]) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def to_edge_list(g: Graph) -> str:
    return "".join([f"n={g.n}\n", *(f"{u} {v}\n" for u, v in g.edges)])


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True)
