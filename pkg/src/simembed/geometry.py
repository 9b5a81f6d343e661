"""Exact integer geometry kernel.

Every predicate here is evaluated in exact integer arithmetic; no floating
point appears anywhere, so the answers are never wrong by rounding.  All
operations are pure functions and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import CoordinateBudgetError, DegenerateSegmentError, DuplicatePointError

# Largest coordinate magnitude accepted anywhere in the kernel.  Generous
# enough for the largest grids the embedders emit at practical sizes
# (n <= 300), and small enough that every intermediate product below fits
# comfortably in 128 bits.
COORD_LIMIT = 1 << 40


@dataclass(frozen=True, order=True)
class GridPoint:
    """An exact lattice point.  Out-of-budget coordinates are rejected."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise CoordinateBudgetError(
                f"coordinates must be integers, got ({self.x!r}, {self.y!r})"
            )
        if abs(self.x) > COORD_LIMIT or abs(self.y) > COORD_LIMIT:
            raise CoordinateBudgetError(
                f"coordinate magnitude exceeds budget 2^40: ({self.x}, {self.y})"
            )


@dataclass(frozen=True)
class Segment:
    """A closed straight-line segment with distinct endpoints."""

    a: GridPoint
    b: GridPoint

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise DegenerateSegmentError(f"segment endpoints coincide at {self.a}")


def orient(a: GridPoint, b: GridPoint, c: GridPoint) -> int:
    """Sign of the cross product (b - a) x (c - a).

    +1 means c lies left of the directed line a->b (counterclockwise turn),
    -1 right of it, 0 collinear.
    """
    det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def _conflict_raw(ax, ay, bx, by, cx, cy, dx, dy) -> bool:
    # Shared by the public Segment API and the certifier's inner loop.
    o1 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    o2 = (bx - ax) * (dy - ay) - (by - ay) * (dx - ax)
    o3 = (dx - cx) * (ay - cy) - (dy - cy) * (ax - cx)
    o4 = (dx - cx) * (by - cy) - (dy - cy) * (bx - cx)

    if (o1 > 0) != (o2 > 0) and o1 != 0 and o2 != 0 and (o3 > 0) != (o4 > 0) and o3 != 0 and o4 != 0:
        return True  # proper crossing

    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        # Collinear: conflict iff the 1-D overlap is longer than a point.
        if ax != bx:
            lo1, hi1 = min(ax, bx), max(ax, bx)
            lo2, hi2 = min(cx, dx), max(cx, dx)
        else:
            lo1, hi1 = min(ay, by), max(ay, by)
            lo2, hi2 = min(cy, dy), max(cy, dy)
        return max(lo1, lo2) < min(hi1, hi2)

    # Endpoint of one segment strictly inside the other.
    if o1 == 0 and _strictly_between(ax, ay, cx, cy, bx, by):
        return True
    if o2 == 0 and _strictly_between(ax, ay, dx, dy, bx, by):
        return True
    if o3 == 0 and _strictly_between(cx, cy, ax, ay, dx, dy):
        return True
    if o4 == 0 and _strictly_between(cx, cy, bx, by, dx, dy):
        return True
    return False


def _strictly_between(px, py, qx, qy, rx, ry) -> bool:
    # q is collinear with p-r; is it strictly inside the segment?
    if px != rx:
        return min(px, rx) < qx < max(px, rx)
    return min(py, ry) < qy < max(py, ry)


def segments_conflict(s1: Segment, s2: Segment) -> bool:
    """True iff the segments share any point other than a common endpoint.

    Proper crossings, collinear overlaps, and an endpoint of one segment
    sitting in the interior of the other all count as conflicts.  Touching
    at exactly one shared endpoint does not.
    """
    return _conflict_raw(
        s1.a.x, s1.a.y, s1.b.x, s1.b.y, s2.a.x, s2.a.y, s2.b.x, s2.b.y
    )


def _check_distinct(points: list[GridPoint]) -> None:
    seen: dict[tuple[int, int], int] = {}
    for i, p in enumerate(points):
        key = (p.x, p.y)
        if key in seen:
            raise DuplicatePointError(f"points {seen[key]} and {i} coincide at {key}")
        seen[key] = i


def find_collinear_triple(points: list[GridPoint]) -> Optional[tuple[int, int, int]]:
    """Lexicographically smallest index triple (i, j, k) with collinear points.

    Returns None when the set is in general position.  Uses slope hashing
    per anchor, which is much faster than the cubic scan but returns the
    identical triple.
    """
    _check_distinct(points)
    n = len(points)
    if n < 3:
        return None
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    for i in range(n - 2):
        xi, yi = xs[i], ys[i]
        buckets: dict[tuple[int, int], list[int]] = {}
        for j in range(i + 1, n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            g = math.gcd(abs(dx), abs(dy))
            dx //= g
            dy //= g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            buckets.setdefault((dx, dy), []).append(j)
        best: Optional[tuple[int, int]] = None
        for idxs in buckets.values():
            if len(idxs) >= 2:
                cand = (idxs[0], idxs[1])
                if best is None or cand < best:
                    best = cand
        if best is not None:
            return (i, best[0], best[1])
    return None


def convex_hull(points: list[GridPoint]) -> list[int]:
    """Indices of hull vertices in counterclockwise order (monotone chain).

    Starts at the lexicographically smallest point.  Points interior to a
    hull edge are dropped, so with no three collinear inputs every hull
    point appears.
    """
    _check_distinct(points)
    n = len(points)
    if n < 3:
        raise ValueError("convex hull needs at least 3 points")
    idx = sorted(range(n), key=lambda i: (points[i].x, points[i].y))

    def build(seq: list[int]) -> list[int]:
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and orient(points[chain[-2]], points[chain[-1]], points[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(idx)
    upper = build(idx[::-1])
    return lower[:-1] + upper[:-1]


def point_in_convex_hull(p: GridPoint, hull_pts: list[GridPoint]) -> bool:
    """True iff p lies inside or on the hull polygon (given in CCW order)."""
    m = len(hull_pts)
    if m == 1:
        return p == hull_pts[0]
    if m == 2:
        a, b = hull_pts
        if orient(a, b, p) != 0:
            return False
        return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    for i in range(m):
        if orient(hull_pts[i], hull_pts[(i + 1) % m], p) < 0:
            return False
    return True
