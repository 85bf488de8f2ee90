"""Segment intersection tests for straight-line and polyline drawings."""

from __future__ import annotations

from typing import Hashable, Sequence

import numpy as np

TOL = 1e-9

Point = tuple[float, float]


def _touching(a, b, c, d, tol):
    """Vectorised: do closed segments ab and cd meet (within ``tol``)?"""
    ab = b - a
    cd = d - c
    lab = np.maximum(np.hypot(ab[..., 0], ab[..., 1]), tol)
    lcd = np.maximum(np.hypot(cd[..., 0], cd[..., 1]), tol)

    def cross(u, w):
        return u[..., 0] * w[..., 1] - u[..., 1] * w[..., 0]

    # signed distances to the supporting lines
    d1 = cross(ab, c - a) / lab
    d2 = cross(ab, d - a) / lab
    d3 = cross(cd, a - c) / lcd
    d4 = cross(cd, b - c) / lcd
    proper = (((d1 > tol) & (d2 < -tol)) | ((d1 < -tol) & (d2 > tol))) & (
        ((d3 > tol) & (d4 < -tol)) | ((d3 < -tol) & (d4 > tol))
    )

    def on_segment(p, q, r, dist, length):
        # r within tol of segment pq, given its line distance
        t = ((r - p) * (q - p)).sum(axis=-1) / (length * length)
        slack = tol / length
        return (np.abs(dist) <= tol) & (t >= -slack) & (t <= 1 + slack)

    touch = (
        on_segment(a, b, c, d1, lab)
        | on_segment(a, b, d, d2, lab)
        | on_segment(c, d, a, d3, lcd)
        | on_segment(c, d, b, d4, lcd)
    )
    return proper | touch


def count_crossings(
    segments: Sequence[tuple[Point, Point]],
    endpoint_ids: Sequence[tuple[Hashable, Hashable]],
    tol: float = TOL,
) -> list[tuple[int, int]]:
    """Pairs of segments that meet anywhere other than at a shared endpoint.

    ``endpoint_ids`` names the two endpoints of each segment (vertex ids or
    bend-point ids). Segments naming a common endpoint may touch there, but
    must not overlap along a stretch.
    """
    k = len(segments)
    if k < 2:
        return []
    arr = np.asarray(segments, dtype=float)  # (k, 2, 2)
    a, b = arr[:, 0], arr[:, 1]
    iu, ju = np.triu_indices(k, 1)
    hit = _touching(a[iu], b[iu], a[ju], b[ju], tol)
    ids = [set(e) for e in endpoint_ids]
    bad = []
    for i, j in zip(iu[hit].tolist(), ju[hit].tolist()):
        shared = ids[i] & ids[j]
        if not shared:
            bad.append((i, j))
            continue
        if len(shared) > 1 or _overlap_at_shared(arr[i], arr[j], endpoint_ids[i], endpoint_ids[j], tol):
            bad.append((i, j))
    return bad


def _overlap_at_shared(s, t, sid, tid, tol) -> bool:
    si = 0 if sid[0] in tid else 1
    ti = 0 if tid[0] == sid[si] else 1
    p = s[si]
    x = s[1 - si]
    y = t[1 - ti]
    if np.hypot(*(t[ti] - p)) > tol:
        # same id but different coordinates: treat as a defect
        return True
    u, w = x - p, y - p
    lu, lw = np.hypot(*u), np.hypot(*w)
    if lu <= tol or lw <= tol:
        return True
    dist = abs(u[0] * w[1] - u[1] * w[0]) / max(lu, lw)
    return dist <= tol and float(np.dot(u, w)) > 0


def signed_area(points: Sequence[Point]) -> float:
    total = 0.0
    for (x1, y1), (x2, y2) in zip(points, [*points[1:], points[0]]):
        total += x1 * y2 - x2 * y1
    return total / 2
