"""Embedders for instances whose vertex mapping is given.

Two paths go straight onto an n x n grid, caterpillars go through the
two-path layout plus a grid refinement that breaks all collinearities,
and a path/caterpillar pair uses the doubled-column layout with right
shifts.  The five-path machinery provides the impossibility certificate:
pair coverage plus an exhaustive search over small grids.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    InternalInvariantError,
    InvalidInstanceError,
    SearchBudgetError,
)
from .geometry import GridPoint, _conflict_raw
from .graphs import Caterpillar, PathOrder, caterpillar_to_path

#: Largest square grid the five-point search will exhaust.
EXHAUSTIVE_GRID_LIMIT = 8


@dataclass
class SimultaneousEmbedding:
    """A drawing shared by all layers: one point per vertex plus the
    per-layer edge lists.  With free mapping, ``assignments`` maps each
    layer's own vertex indices to point indices."""

    coords: list[GridPoint]
    layers: list[list[tuple[int, int]]]
    width: int
    height: int
    assignments: Optional[list[list[int]]] = None


def _check_permutation(order: Sequence[int], n: int, what: str) -> None:
    if sorted(order) != list(range(n)):
        raise InvalidInstanceError(f"{what} must be a permutation of 0..{n - 1}")


def embed_two_paths(p1: PathOrder, p2: PathOrder) -> SimultaneousEmbedding:
    """Place vertex v at (position in p1, position in p2), 1-based.

    Each layer is monotone in one axis, so neither path can self-cross;
    the grid is exactly n x n.
    """
    n = p1.n
    if p2.n != n:
        raise InvalidInstanceError("paths must share one vertex set")
    _check_permutation(p1.order, n, "first path")
    _check_permutation(p2.order, n, "second path")
    pos1 = [0] * n
    pos2 = [0] * n
    for i, v in enumerate(p1.order):
        pos1[v] = i + 1
    for i, v in enumerate(p2.order):
        pos2[v] = i + 1
    coords = [GridPoint(pos1[v], pos2[v]) for v in range(n)]
    return SimultaneousEmbedding(
        coords=coords, layers=[p1.edges(), p2.edges()], width=n, height=n
    )


def _offset_scan(half_w: int, half_h: int):
    # Row-major from the cell center outward: dy = 0, +1, -1, ...; within a
    # row dx = 0, +1, -1, ...
    def steps(limit: int):
        yield 0
        for d in range(1, limit + 1):
            yield d
            yield -d

    for dy in steps(half_h):
        for dx in steps(half_w):
            yield dx, dy


def _scatter_general_position(
    centers: list[tuple[int, int]], half_w: int, half_h: int
) -> list[GridPoint]:
    """Greedy placement: one point per cell (center +- half sizes), never
    collinear with any two already-placed points.  A counting argument on
    the cell capacity guarantees a free slot exists."""
    px: list[int] = []
    py: list[int] = []
    for cx, cy in centers:
        placed = None
        for dx, dy in _offset_scan(half_w, half_h):
            x = cx + dx
            y = cy + dy
            m = len(px)
            ok = True
            for j in range(m - 1):
                xj = px[j]
                yj = py[j]
                for k in range(j + 1, m):
                    if (px[k] - xj) * (y - yj) == (py[k] - yj) * (x - xj):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                placed = (x, y)
                break
        if placed is None:
            raise InternalInvariantError(
                "no collinearity-free slot in cell; counting bound violated"
            )
        px.append(placed[0])
        py.append(placed[1])
    return [GridPoint(x, y) for x, y in zip(px, py)]


def refine_general_position(
    points: list[GridPoint], base_extent: int
) -> list[GridPoint]:
    """Rescale a small-grid point set so no three points are collinear.

    Each input point's cell is the box of its scaled position plus/minus
    (m, m^2) where m = max(base extent, point count); x stretches by
    2m + 1, y by 2m^2 + 1.  Points in different cells keep their relative
    x and y order.
    """
    for p in points:
        if abs(p.x) > base_extent or abs(p.y) > base_extent:
            raise InvalidInstanceError(
                f"point {p} lies outside the declared base extent {base_extent}"
            )
    seen = set()
    for p in points:
        if (p.x, p.y) in seen:
            raise InvalidInstanceError(f"duplicate base point {p}")
        seen.add((p.x, p.y))
    m = max(base_extent, len(points))
    cell_w = 2 * m + 1
    cell_h = 2 * m * m + 1
    centers = [(p.x * cell_w, p.y * cell_h) for p in points]
    return _scatter_general_position(centers, m, m * m)


def _translate_to_origin(points: list[GridPoint]) -> tuple[list[GridPoint], int, int]:
    min_x = min(p.x for p in points)
    min_y = min(p.y for p in points)
    shifted = [GridPoint(p.x - min_x + 1, p.y - min_y + 1) for p in points]
    width = max(p.x for p in shifted)
    height = max(p.y for p in shifted)
    return shifted, width, height


def embed_two_caterpillars(c1: Caterpillar, c2: Caterpillar) -> SimultaneousEmbedding:
    """Linearize both caterpillars, lay the two paths out on n x n, then
    refine to general position and swap the path edges for the caterpillar
    edges.  Fits n(2n+1) x n(2n^2+1)."""
    n = c1.n
    if c2.n != n:
        raise InvalidInstanceError("caterpillars must share one vertex set")
    p1 = caterpillar_to_path(c1)
    p2 = caterpillar_to_path(c2)
    base = embed_two_paths(p1, p2)
    refined = refine_general_position(base.coords, n)
    coords, width, height = _translate_to_origin(refined)
    return SimultaneousEmbedding(
        coords=coords, layers=[c1.edges(), c2.edges()], width=width, height=height
    )


def embed_path_caterpillar(
    p: PathOrder, cat: Caterpillar
) -> tuple[SimultaneousEmbedding, int]:
    """Embed a path and a caterpillar on at most (2n - k) x n, k = leg count.

    Spine vertex number i starts in column 2i, its legs in column 2i + 1;
    rows follow the path order.  Marching along the spine, whenever a leg
    of the current spine vertex is collinear with the spine edge ahead,
    that edge's far endpoint and everything right of it shift one column
    right.  Returns the embedding and the number of shifts performed.
    """
    n = p.n
    if cat.n != n:
        raise InvalidInstanceError("path and caterpillar must share one vertex set")
    _check_permutation(p.order, n, "path")
    _check_permutation(
        [v for v in itertools.chain(cat.spine, *cat.legs)], n, "caterpillar"
    )
    ys = [0] * n
    for i, v in enumerate(p.order):
        ys[v] = i + 1
    xs = [0] * n
    for i, s in enumerate(cat.spine):
        xs[s] = 2 * (i + 1)
        for leg in cat.legs[i]:
            xs[leg] = 2 * (i + 1) + 1

    total_legs = cat.leg_count()
    shifts = 0
    for i in range(len(cat.spine) - 1):
        a = cat.spine[i]
        b = cat.spine[i + 1]
        while True:
            hit = False
            for leg in cat.legs[i]:
                if (xs[b] - xs[a]) * (ys[leg] - ys[a]) == (ys[b] - ys[a]) * (
                    xs[leg] - xs[a]
                ):
                    hit = True
                    break
            if not hit:
                break
            threshold = xs[b]
            for v in range(n):
                if xs[v] >= threshold:
                    xs[v] += 1
            shifts += 1
            if shifts > total_legs:
                raise InternalInvariantError("shift count exceeded the leg count")

    coords = [GridPoint(xs[v], ys[v]) for v in range(n)]
    emb = SimultaneousEmbedding(
        coords=coords,
        layers=[p.edges(), cat.edges()],
        width=max(xs),
        height=n,
    )
    return emb, shifts


# ---------------------------------------------------------------------------
# Five paths on five vertices
# ---------------------------------------------------------------------------

#: The five 5-vertex paths no point placement can satisfy simultaneously.
FIVE_PATHS = ("12345", "13542", "25134", "32415", "35214")


def path_from_digits(digits: str) -> PathOrder:
    """Parse compact 1-based path notation such as '13542'."""
    return PathOrder([int(ch) - 1 for ch in digits])


@dataclass
class PairCoverage:
    """Which paths contain both edges of each vertex-disjoint K5 edge pair."""

    pairs: list[tuple[tuple[int, int], tuple[int, int]]]
    covered_by: list[list[int]]

    @property
    def all_covered(self) -> bool:
        return all(self.covered_by)

    def uncovered(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return [pair for pair, paths in zip(self.pairs, self.covered_by) if not paths]

    def per_path_counts(self, path_count: int) -> list[int]:
        counts = [0] * path_count
        for paths in self.covered_by:
            for idx in paths:
                counts[idx] += 1
        return counts

    @staticmethod
    def label(pair: tuple[tuple[int, int], tuple[int, int]]) -> str:
        (a, b), (c, d) = pair
        return f"{a + 1}{b + 1}-{c + 1}{d + 1}"


def disjoint_edge_pairs() -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The 15 vertex-disjoint edge pairs of K5, lexicographically ordered."""
    edges = list(itertools.combinations(range(5), 2))
    pairs = []
    for e1, e2 in itertools.combinations(edges, 2):
        if not set(e1) & set(e2):
            pairs.append((e1, e2))
    return sorted(pairs)


def five_path_pair_coverage(paths: Sequence[PathOrder]) -> PairCoverage:
    """For each disjoint K5 edge pair, list the paths containing both edges."""
    for p in paths:
        if p.n != 5:
            raise InvalidInstanceError("pair coverage is defined for 5-vertex paths")
        _check_permutation(p.order, 5, "path")
    edge_sets = [
        {tuple(sorted(e)) for e in p.edges()} for p in paths
    ]
    pairs = disjoint_edge_pairs()
    covered = [
        [i for i, es in enumerate(edge_sets) if e1 in es and e2 in es]
        for e1, e2 in pairs
    ]
    return PairCoverage(pairs=pairs, covered_by=covered)


@dataclass
class FivePointSearchResult:
    """Outcome of scanning placements of 5 labeled vertices on a grid."""

    counterexample: Optional[list[GridPoint]]
    placements_checked: int
    exhaustive: bool
    grid: tuple[int, int]

    @property
    def crossing_forced(self) -> bool:
        return self.counterexample is None


def _grid_points(w: int, h: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(w) for y in range(h)]


def _fundamental_domain(w: int, h: int) -> list[int]:
    # Crossing structure is invariant under the grid's reflections (and the
    # diagonal when square), so vertex 0 may be confined to one fundamental
    # domain without losing any placement class.
    pts = _grid_points(w, h)
    out = []
    for i, (x, y) in enumerate(pts):
        if 2 * x > w - 1 or 2 * y > h - 1:
            continue
        if w == h and y > x:
            continue
        out.append(i)
    return out


def exhaustive_five_point_check(
    grid_extent: int | tuple[int, int],
    paths: Sequence[PathOrder],
    seed: Optional[int] = None,
    samples: Optional[int] = None,
) -> FivePointSearchResult:
    """Search placements of the 5 vertices on the grid, no 3 collinear,
    for one where every given path is crossing-free.

    Returns the first such counterexample found, or None if every valid
    placement forces a crossing in some path.  Grids up to extent 8 are
    exhausted; larger grids require ``samples`` and are randomly probed
    with the seeded generator.
    """
    if isinstance(grid_extent, tuple):
        w, h = grid_extent
    else:
        w = h = grid_extent
    if w < 1 or h < 1:
        raise InvalidInstanceError("grid extent must be positive")
    for p in paths:
        if p.n != 5:
            raise InvalidInstanceError("the search is defined for 5-vertex paths")
        _check_permutation(p.order, 5, "path")

    # Same-path disjoint edge pairs, bucketed by their largest vertex so the
    # search can check each pair as soon as its last endpoint is placed.
    cross_checks: list[list[tuple[int, int, int, int]]] = [[] for _ in range(5)]
    for p in paths:
        edges = [tuple(sorted(e)) for e in p.edges()]
        for e1, e2 in itertools.combinations(edges, 2):
            if set(e1) & set(e2):
                continue
            level = max(*e1, *e2)
            cross_checks[level].append((*e1, *e2))
    tri_checks: list[list[tuple[int, int]]] = [
        [(i, j) for i in range(lvl) for j in range(i + 1, lvl)] for lvl in range(5)
    ]

    if max(w, h) > EXHAUSTIVE_GRID_LIMIT:
        if samples is None:
            raise SearchBudgetError(
                f"grid {w}x{h} exceeds the exhaustive budget "
                f"({EXHAUSTIVE_GRID_LIMIT}); pass a sample count"
            )
        return _sampled_check(w, h, cross_checks, tri_checks, seed, samples)

    pts = _grid_points(w, h)
    count = len(pts)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]

    def conflict(a: int, b: int, c: int, d: int) -> bool:
        return _conflict_raw(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d])

    conflict_table: Optional[bytearray] = None
    if count**4 <= 2_000_000:
        conflict_table = bytearray(count**4)
        for a in range(count):
            for b in range(count):
                if a == b:
                    continue
                base = (a * count + b) * count
                for c in range(count):
                    for d in range(count):
                        if c == d:
                            continue
                        if conflict(a, b, c, d):
                            conflict_table[(base + c) * count + d] = 1

    placement = [0] * 5
    checked = 0
    first_candidates = _fundamental_domain(w, h)

    def collinear(a: int, b: int, c: int) -> bool:
        return (xs[b] - xs[a]) * (ys[c] - ys[a]) == (ys[b] - ys[a]) * (xs[c] - xs[a])

    def level_ok(lvl: int) -> bool:
        pt = placement[lvl]
        for i, j in tri_checks[lvl]:
            if collinear(placement[i], placement[j], pt):
                return False
        for a, b, c, d in cross_checks[lvl]:
            pa, pb, pc, pd = placement[a], placement[b], placement[c], placement[d]
            if conflict_table is not None:
                if conflict_table[((pa * count + pb) * count + pc) * count + pd]:
                    return False
            elif conflict(pa, pb, pc, pd):
                return False
        return True

    def dfs(lvl: int) -> Optional[list[int]]:
        nonlocal checked
        candidates = first_candidates if lvl == 0 else range(count)
        for pt in candidates:
            if pt in placement[:lvl]:
                continue
            placement[lvl] = pt
            if lvl == 4:
                checked += 1
            if not level_ok(lvl):
                continue
            if lvl == 4:
                return list(placement)
            found = dfs(lvl + 1)
            if found is not None:
                return found
        return None

    witness = dfs(0)
    counterexample = (
        [GridPoint(xs[i], ys[i]) for i in witness] if witness is not None else None
    )
    return FivePointSearchResult(
        counterexample=counterexample,
        placements_checked=checked,
        exhaustive=True,
        grid=(w, h),
    )


def _sampled_check(
    w: int,
    h: int,
    cross_checks: list[list[tuple[int, int, int, int]]],
    tri_checks: list[list[tuple[int, int]]],
    seed: Optional[int],
    samples: int,
) -> FivePointSearchResult:
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        pts: list[tuple[int, int]] = []
        used = set()
        while len(pts) < 5:
            cand = (rng.randrange(w), rng.randrange(h))
            if cand not in used:
                used.add(cand)
                pts.append(cand)
        checked += 1
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        ok = True
        for lvl in range(5):
            for i, j in tri_checks[lvl]:
                if (xs[j] - xs[i]) * (ys[lvl] - ys[i]) == (ys[j] - ys[i]) * (
                    xs[lvl] - xs[i]
                ):
                    ok = False
                    break
            if not ok:
                break
            for a, b, c, d in cross_checks[lvl]:
                if _conflict_raw(
                    xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d]
                ):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return FivePointSearchResult(
                counterexample=[GridPoint(x, y) for x, y in pts],
                placements_checked=checked,
                exhaustive=False,
                grid=(w, h),
            )
    return FivePointSearchResult(
        counterexample=None, placements_checked=checked, exhaustive=False, grid=(w, h)
    )
