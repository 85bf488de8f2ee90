"""Explicit K3,3 subdivisions inside great shadows, plus a brute-force search."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Optional

from .constructions import ShadowGraph, ShadowKind, great_shadow
from .graph import CyclePath, Graph, ThetaSubdivision
from .recognition import NotBipartite, NotCactus, classify
from .subdivision import K33Witness, validate_k33

__all__ = [
    "SearchBoundExceeded",
    "WitnessError",
    "k33_from_odd_cycle",
    "k33_from_theta",
    "k33_search",
    "shadow_witness",
    "validate_k33",
]

DEFAULT_SEARCH_ORDER = 16


class WitnessError(ValueError):
    pass


class SearchBoundExceeded(RuntimeError):
    """The graph is larger than the brute-force search is allowed to handle."""


def _require_great(sg: ShadowGraph) -> None:
    if sg.kind is not ShadowKind.GREAT:
        raise WitnessError(f"expected a great shadow, got {sg.kind.value}")


def _alternate(vertices, start_shadow: bool, n: int) -> list[int]:
    """Alternate original / shadow copies along ``vertices``."""
    out = []
    shadow = start_shadow
    for x in vertices:
        out.append(x + n if shadow else x)
        shadow = not shadow
    return out


def k33_from_odd_cycle(sg: ShadowGraph, c: CyclePath) -> K33Witness:
    """K3,3 subdivision in ``sg`` built around the odd cycle ``c``.

    With the cycle written ``v0, v1, ..., v2k`` the branch triples are
    ``{v2k, v0, v1}`` and their shadows. Seven cross pairs are edges; the two
    missing ones are replaced by paths that zig-zag between the cycle and its
    shadow copy in opposite phase, so they never meet.
    """
    _require_great(sg)
    n = sg.original_order
    vs = list(c.vertices)
    if not c.closed or len(vs) < 3 or len(vs) % 2 == 0:
        raise WitnessError(f"need an odd cycle of length >= 3, got length {len(vs)}")
    reason = c.violation(sg.original())
    if reason is not None:
        raise WitnessError(f"not a cycle of the original graph: {reason}")
    v, w, u = vs[0], vs[1], vs[-1]
    s = lambda x: x + n  # noqa: E731
    p1 = _alternate(vs[1:], start_shadow=False, n=n)  # w ... u'
    p2 = _alternate(vs[1:], start_shadow=True, n=n)  # w' ... u
    paths = {
        (u, s(u)): [u, s(u)],
        (u, s(v)): [u, s(v)],
        (v, s(u)): [v, s(u)],
        (v, s(v)): [v, s(v)],
        (v, s(w)): [v, s(w)],
        (w, s(v)): [w, s(v)],
        (w, s(w)): [w, s(w)],
        (w, s(u)): p1,
        (u, s(w)): list(reversed(p2)),
    }
    return K33Witness.from_mapping((u, v, w), (s(u), s(v), s(w)), paths)


def _rotate_roles(th: ThetaSubdivision) -> ThetaSubdivision:
    """Make the old shared path a side path so that it can carry a2, a3."""
    return ThetaSubdivision(th.u, th.v, th.middle, th.side_a, th.side_b)


def k33_from_theta(sg: ShadowGraph, th: ThetaSubdivision) -> K33Witness:
    """K3,3 subdivision in ``sg`` from a subdivided diamond of the original graph.

    All-even and all-odd thetas get the explicit path systems; mixed parity
    is rejected because such a theta holds an odd cycle. When neither side
    path has two interior vertices the roles are rotated, and the single
    remaining shape (three paths with one interior vertex each) is handled
    by exhaustive search inside the shadow of the theta.
    """
    _require_great(sg)
    reason = th.violation(sg.original())
    if reason is not None:
        raise WitnessError(f"theta does not live in the original graph: {reason}")
    ell, m, n_ = th.params
    if not (ell % 2 == m % 2 == n_ % 2):
        raise WitnessError(f"mixed-parity theta {th.params} contains an odd cycle")
    if ell < 2 and n_ >= 2:
        th = th.swapped()
    elif ell < 2 and len(th.middle) >= 2:
        th = _rotate_roles(th)
    if th.ell < 2:
        return _theta_fallback(sg, th)
    if th.ell % 2 == 0:
        return _theta_even(sg, th)
    return _theta_odd(sg, th)


def _theta_even(sg: ShadowGraph, th: ThetaSubdivision) -> K33Witness:
    N = sg.original_order
    s = lambda x: x + N  # noqa: E731
    u, v = th.u, th.v
    a = (None, *th.side_a)  # 1-based
    ell = th.ell
    xi = list(th.middle)
    a1, a2 = a[1], a[2]
    p_up_v = [s(u), *_alternate(xi, start_shadow=False, n=N), v]
    p_a1p_v = [s(a1), u, *_alternate(xi, start_shadow=True, n=N), v]
    p_a2p_v = [s(a2), *_alternate(a[3:], start_shadow=False, n=N), v]
    # back along a_l .. a_3 in the phase opposite to p_a2p_v
    tail = _alternate(a[ell:2:-1], start_shadow=(ell % 2 == 1), n=N)
    p_up_a2 = [s(u), *th.side_b, s(v), *tail, a2]
    paths = {
        (a1, s(a1)): [a1, s(a1)],
        (a2, s(a2)): [a2, s(a2)],
        (a2, s(a1)): [a2, s(a1)],
        (a1, s(a2)): [a1, s(a2)],
        (a1, s(u)): [a1, s(u)],
        (v, s(u)): list(reversed(p_up_v)),
        (v, s(a1)): list(reversed(p_a1p_v)),
        (v, s(a2)): list(reversed(p_a2p_v)),
        (a2, s(u)): list(reversed(p_up_a2)),
    }
    return K33Witness.from_mapping((a1, a2, v), (s(a1), s(a2), s(u)), paths)


def _theta_odd(sg: ShadowGraph, th: ThetaSubdivision) -> K33Witness:
    N = sg.original_order
    s = lambda x: x + N  # noqa: E731
    u, v = th.u, th.v
    a = (None, *th.side_a)
    ell = th.ell
    xi = list(th.middle)
    a1, a2 = a[1], a[2]
    p_uv = [u, *_alternate(xi, start_shadow=True, n=N), v]
    p_a1v = [a1, s(u), *_alternate(xi, start_shadow=False, n=N), v]
    p_a2v = [a2, *_alternate(a[3:], start_shadow=True, n=N), v]
    tail = _alternate(a[ell:2:-1], start_shadow=(ell % 2 == 0), n=N)
    p_u_a2p = [u, *th.side_b, s(v), *tail, s(a2)]
    paths = {
        (a1, s(a1)): [a1, s(a1)],
        (a2, s(a2)): [a2, s(a2)],
        (a2, s(a1)): [a2, s(a1)],
        (a1, s(a2)): [a1, s(a2)],
        (u, s(a1)): [u, s(a1)],
        (u, v): p_uv,
        (a1, v): p_a1v,
        (a2, v): p_a2v,
        (u, s(a2)): p_u_a2p,
    }
    return K33Witness.from_mapping((a1, a2, u), (s(a1), s(a2), v), paths)


def _theta_fallback(sg: ShadowGraph, th: ThetaSubdivision) -> K33Witness:
    local, labels = Graph(sg.original_order, th.edges()).induced(th.vertices())
    k = len(labels)
    found = k33_search(great_shadow(local).graph, max_order=2 * k)
    if found is None:  # pragma: no cover - every theta has a non-planar shadow
        raise WitnessError(f"no K3,3 found in the shadow of theta {th.params}")
    N = sg.original_order

    def lift(x: int) -> int:
        return labels[x] if x < k else labels[x - k] + N

    return K33Witness(
        tuple(lift(x) for x in found.delta1),
        tuple(lift(x) for x in found.delta2),
        tuple(tuple(lift(x) for x in p) for p in found.paths),
    )


# ---------------------------------------------------------------------------
# Exhaustive search
# ---------------------------------------------------------------------------


def k33_search(g: Graph, max_order: int = DEFAULT_SEARCH_ORDER) -> Optional[K33Witness]:
    """Backtracking search for a subdivided K3,3 in ``g``.

    Branch triples are tried in lexicographic order; cross pairs that are
    edges are used directly, the rest are routed as induced paths through
    unused non-branch vertices. Returns the first witness found, or ``None``
    when ``g`` has none. Raises :class:`SearchBoundExceeded` for graphs with
    more than ``max_order`` vertices.
    """
    if g.n > max_order:
        raise SearchBoundExceeded(f"order {g.n} exceeds search bound {max_order}")
    adj = [frozenset(g.neighbors(v)) for v in g.vertices()]
    candidates = [v for v in g.vertices() if len(adj[v]) >= 3]
    if len(candidates) < 6:
        return None
    for d1 in combinations(candidates, 3):
        rest = [x for x in candidates if x not in d1 and x > d1[0]]
        for d2 in combinations(rest, 3):
            found = _route(adj, d1, d2)
            if found is not None:
                w = K33Witness.from_mapping(d1, d2, found)
                assert w.violation(g) is None
                return w
    return None


def _route(adj, d1, d2) -> Optional[dict]:
    branch = set(d1) | set(d2)
    pairs = [(a, b) for a in d1 for b in d2]
    paths = {}
    todo = []
    for a, b in pairs:
        if b in adj[a]:
            paths[a, b] = [a, b]
        else:
            todo.append((a, b))
    # every branch vertex needs a private exit for each of its routed pairs
    for x in branch:
        need = sum(1 for p in todo if x in p)
        if need and len(adj[x] - branch) < need:
            return None
    used: set[int] = set()
    if _route_rest(adj, branch, todo, 0, used, paths):
        return paths
    return None


def _connected_avoiding(adj, s, t, blocked) -> bool:
    seen = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y == t:
                return True
            if y in seen or y in blocked:
                continue
            seen.add(y)
            queue.append(y)
    return False


def _route_rest(adj, branch, todo, i, used, paths) -> bool:
    if i == len(todo):
        return True
    blocked = branch | used
    for s, t in todo[i:]:
        if not _connected_avoiding(adj, s, t, blocked):
            return False
    s, t = todo[i]
    for path in _induced_paths(adj, s, t, blocked):
        interior = path[1:-1]
        used.update(interior)
        paths[s, t] = path
        if _route_rest(adj, branch, todo, i + 1, used, paths):
            return True
        used.difference_update(interior)
        del paths[s, t]
    return False


def _induced_paths(adj, s, t, blocked):
    """Induced ``s``-``t`` paths with interior outside ``blocked``."""
    path = [s]
    on_path = {s}

    def extend():
        x = path[-1]
        if t in adj[x]:
            yield path + [t]
            return
        for y in sorted(adj[x]):
            if y in blocked or y in on_path:
                continue
            if any(z in adj[y] for z in path[:-1]):
                continue
            path.append(y)
            on_path.add(y)
            yield from extend()
            path.pop()
            on_path.discard(y)

    yield from extend()


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------


def shadow_witness(g: Graph) -> Optional[K33Witness]:
    """A K3,3 subdivision in the great shadow of ``g``, or ``None`` if it is planar."""
    verdict = classify(g)
    sg = great_shadow(g)
    if isinstance(verdict, NotBipartite):
        return k33_from_odd_cycle(sg, verdict.cycle)
    if isinstance(verdict, NotCactus):
        return k33_from_theta(sg, verdict.theta)
    return None


__all__ += ["DEFAULT_SEARCH_ORDER"]
