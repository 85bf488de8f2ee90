"""Kuratowski subdivision witnesses and their structural validation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from .graph import Graph


def _check_paths(
    host: Graph,
    branches: Sequence[int],
    pairs: Sequence[tuple[int, int]],
    paths: Sequence[Sequence[int]],
) -> Optional[str]:
    if len(set(branches)) != len(branches):
        return "branch vertices are not distinct"
    if len(paths) != len(pairs):
        return f"expected {len(pairs)} paths, got {len(paths)}"
    branch_set = set(branches)
    used: dict[int, int] = {}
    for k, ((s, t), path) in enumerate(zip(pairs, paths)):
        if len(path) < 2:
            return f"path {k} is too short"
        if (path[0], path[-1]) != (s, t):
            return f"path {k} runs {path[0]}..{path[-1]}, expected {s}..{t}"
        if len(set(path)) != len(path):
            return f"path {k} repeats a vertex"
        for a, b in zip(path, path[1:]):
            if not (0 <= a < host.n and 0 <= b < host.n) or not host.has_edge(a, b):
                return f"path {k}: ({a}, {b}) is not an edge"
        for x in path[1:-1]:
            if x in branch_set:
                return f"path {k} passes through branch vertex {x}"
            if x in used:
                return f"paths {used[x]} and {k} share interior vertex {x}"
            used[x] = k
    return None


@dataclass(frozen=True)
class K33Witness:
    """A subdivided K3,3: two branch triples and one path per cross pair.

    ``paths`` is ordered like ``itertools.product(delta1, delta2)``.
    """

    delta1: tuple[int, int, int]
    delta2: tuple[int, int, int]
    paths: tuple[tuple[int, ...], ...]

    @classmethod
    def from_mapping(
        cls,
        delta1: Sequence[int],
        delta2: Sequence[int],
        paths: dict[tuple[int, int], Sequence[int]],
    ) -> K33Witness:
        """Build from a ``{(d1, d2): path}`` mapping; paths given in either direction."""
        ordered = []
        for d1, d2 in product(delta1, delta2):
            if (d1, d2) in paths:
                ordered.append(tuple(paths[d1, d2]))
            elif (d2, d1) in paths:
                ordered.append(tuple(reversed(paths[d2, d1])))
            else:
                raise KeyError(f"no path for pair ({d1}, {d2})")
        return cls(tuple(delta1), tuple(delta2), tuple(ordered))

    def pairs(self) -> list[tuple[int, int]]:
        return list(product(self.delta1, self.delta2))

    def violation(self, host: Graph) -> Optional[str]:
        if len(self.delta1) != 3 or len(self.delta2) != 3:
            return "each side needs three branch vertices"
        if set(self.delta1) & set(self.delta2):
            return "branch triples intersect"
        return _check_paths(host, self.delta1 + self.delta2, self.pairs(), self.paths)

    def vertices(self) -> list[int]:
        return sorted({x for p in self.paths for x in p})

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(a, b), max(a, b)) for p in self.paths for a, b in zip(p, p[1:])})

    def to_dict(self) -> dict:
        return {
            "kind": "K33",
            "delta1": list(self.delta1),
            "delta2": list(self.delta2),
            "paths": [list(p) for p in self.paths],
        }


@dataclass(frozen=True)
class K5Witness:
    """A subdivided K5; ``paths`` ordered like ``itertools.combinations(branches, 2)``."""

    branches: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(self.branches, 2))

    def violation(self, host: Graph) -> Optional[str]:
        if len(self.branches) != 5:
            return "K5 needs five branch vertices"
        return _check_paths(host, self.branches, self.pairs(), self.paths)

    def vertices(self) -> list[int]:
        return sorted({x for p in self.paths for x in p})

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(a, b), max(a, b)) for p in self.paths for a, b in zip(p, p[1:])})

    def to_dict(self) -> dict:
        return {
            "kind": "K5",
            "branches": list(self.branches),
            "paths": [list(p) for p in self.paths],
        }


def validate_k33(host: Graph, w: K33Witness) -> tuple[bool, Optional[str]]:
    """Check every structural requirement of ``w`` against ``host``.

    Returns ``(True, None)`` or ``(False, reason)`` for the first violation.
    """
    reason = w.violation(host)
    return reason is None, reason
