"""Embedders for instances without a prescribed vertex mapping.

The pipeline building blocks: a shift-method grid drawing for plane
triangulations, a scaled perturbation that upgrades any plane drawing to
general position, parabola-based point sets that are collinearity-free by
construction, and the recursive embedding of a maximal outerplanar graph
onto an arbitrary general-position point set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Optional

from .errors import (
    HullEdgeInvariantError,
    InternalInvariantError,
    InvalidInstanceError,
    SearchBudgetError,
)
from .geometry import (
    GridPoint,
    _conflict_raw,
    convex_hull,
    find_collinear_triple,
    orient,
)
from .graphs import (
    Layer,
    _trace_faces,
    check_plane_embedding,
    maximalize_outerplanar,
    triangulate_plane,
    validate_layer,
)
from .mapped import SimultaneousEmbedding, _scatter_general_position, _translate_to_origin


# ---------------------------------------------------------------------------
# Shift-method drawing of plane triangulations
# ---------------------------------------------------------------------------


def _face_vertices(walk: list[tuple[int, int]]) -> list[int]:
    return [d[0] for d in walk]


def _canonical_face(walk: list[tuple[int, int]]) -> tuple[int, ...]:
    verts = _face_vertices(walk)
    k = verts.index(min(verts))
    return tuple(verts[k:] + verts[:k])


def planar_grid_draw(
    layer: Layer, n: int, outer_face: Optional[tuple[int, int, int]] = None
) -> list[GridPoint]:
    """Draw a plane triangulation on the (2n-4) x (n-2) grid.

    Incremental construction: vertices enter in a canonical order along
    the outer face, each insertion shifting the covered part of the
    drawing right by one or two columns so the new fan stays planar.
    The outer face defaults to the lexicographically smallest face walk.
    """
    check_plane_embedding(layer, n)
    if len(layer.edges) != 3 * n - 6:
        raise InvalidInstanceError("grid drawing requires a triangulation (E = 3n-6)")
    rotation = layer.rotation
    assert rotation is not None
    faces = _trace_faces(n, layer.edges, rotation)
    if any(len(f) != 3 for f in faces):
        raise InvalidInstanceError("grid drawing requires all faces to be triangles")

    if outer_face is None:
        walk = min((_canonical_face(f) for f in faces))
    else:
        want = set(outer_face)
        match = next(
            (f for f in faces if set(_face_vertices(f)) == want), None
        )
        if match is None:
            raise InvalidInstanceError(f"{outer_face} is not a face of this embedding")
        walk = _canonical_face(match)
    v1, v2, v_top = walk

    if n == 3:
        out: list[GridPoint] = [GridPoint(0, 0)] * 3
        out[v1] = GridPoint(0, 0)
        out[v2] = GridPoint(2, 0)
        out[v_top] = GridPoint(1, 1)
        return out

    adj = [set(r) for r in rotation]

    # Reverse canonical order: peel chord-free outer vertices off the path
    # from v1 to v2, recording the fan of alive neighbors each leaves behind.
    alive = [True] * n
    on_path = [False] * n
    nxt = {v1: v_top, v_top: v2}
    prv = {v_top: v1, v2: v_top}
    for v in (v1, v_top, v2):
        on_path[v] = True

    def path_iter():
        v = v1
        while True:
            yield v
            if v == v2:
                return
            v = nxt[v]

    fans: dict[int, tuple[int, list[int], int]] = {}
    removal_order: list[int] = []
    for _ in range(n - 3):
        candidate = None
        for v in path_iter():
            if v == v1 or v == v2:
                continue
            path_neighbors = sum(
                1 for w in adj[v] if alive[w] and on_path[w]
            )
            if path_neighbors == 2 and (candidate is None or v < candidate):
                candidate = v
        if candidate is None:
            raise InternalInvariantError("no chord-free outer vertex available")
        u = candidate
        a, b = prv[u], nxt[u]
        alive_ring = [w for w in rotation[u] if alive[w]]
        ia = alive_ring.index(a)
        ring_a = alive_ring[ia:] + alive_ring[:ia]
        if ring_a[-1] == b:
            interior = ring_a[1:-1]
        else:
            ib = alive_ring.index(b)
            ring_b = alive_ring[ib:] + alive_ring[:ib]
            if ring_b[-1] != a:
                raise InternalInvariantError("outer vertex fan is not contiguous")
            interior = ring_b[1:-1][::-1]
        fans[u] = (a, interior, b)
        removal_order.append(u)
        alive[u] = False
        on_path[u] = False
        prev = a
        for w in interior:
            on_path[w] = True
            nxt[prev] = w
            prv[w] = prev
            prev = w
        nxt[prev] = b
        prv[b] = prev

    remaining = [v for v in path_iter()]
    if len(remaining) != 3:
        raise InternalInvariantError("canonical peeling left a non-triangle")
    v3 = remaining[1]

    xs = [0] * n
    ys = [0] * n
    xs[v2] = 2
    xs[v3], ys[v3] = 1, 1
    covered: list[list[int]] = [[v] for v in range(n)]
    path = [v1, v3, v2]

    for v in reversed(removal_order):
        a, interior, b = fans[v]
        ia = path.index(a)
        ib = path.index(b)
        if path[ia + 1 : ib] != interior:
            raise InternalInvariantError("insertion fan does not match the outer path")
        for w in path[ia + 1 : ib]:
            for t in covered[w]:
                xs[t] += 1
        for w in path[ib:]:
            for t in covered[w]:
                xs[t] += 2
        xa, ya = xs[a], ys[a]
        xb, yb = xs[b], ys[b]
        if (xa - ya + xb + yb) % 2 != 0:
            raise InternalInvariantError("diagonal intersection left the lattice")
        xs[v] = (xa - ya + xb + yb) // 2
        ys[v] = (xb + yb - xa + ya) // 2
        bag = [v]
        for w in interior:
            bag.extend(covered[w])
        covered[v] = bag
        path[ia + 1 : ib] = [v]

    if min(xs) < 0 or max(xs) > 2 * n - 4 or min(ys) < 0 or max(ys) > n - 2:
        raise InternalInvariantError("drawing escaped the (2n-4) x (n-2) grid")
    return [GridPoint(xs[v], ys[v]) for v in range(n)]


# ---------------------------------------------------------------------------
# General-position drawing
# ---------------------------------------------------------------------------

#: Safety factor for the general-position perturbation.  Scaling the base
#: drawing by sigma * cell size keeps every perturbation at most a 1/sigma
#: fraction of the point spacing, which is small enough that no strict
#: orientation of a base triple can flip (the worst-case error term stays
#: below the scaled unit determinant for sigma >= 6n).
def _sigma(n: int) -> int:
    return 6 * n


def general_position_bounds(n: int) -> tuple[int, int]:
    """Documented extent bound for :func:`planar_general_position_draw`."""
    s = _sigma(n)
    return (
        s * (2 * n - 4) * (2 * n + 1) + 2 * n + 1,
        s * (n - 2) * (2 * n * n + 1) + 2 * n * n + 1,
    )


def planar_general_position_draw(layer: Layer, n: int) -> list[GridPoint]:
    """Draw a plane graph so that additionally no three vertices are collinear.

    Triangulates, draws on the small grid, scales by the safety factor,
    then perturbs each vertex inside its own (2n+1) x (2n^2+1) cell until
    every collinearity is broken.  Existing crossings cannot appear because
    the scaled spacing dwarfs the cells.
    """
    tri, _dummies = triangulate_plane(layer, n)
    base = planar_grid_draw(tri, n)
    s = _sigma(n)
    cell_w = 2 * n + 1
    cell_h = 2 * n * n + 1
    centers = [(p.x * s * cell_w, p.y * s * cell_h) for p in base]
    return _scatter_general_position(centers, n, n * n)


# ---------------------------------------------------------------------------
# Parabola point sets
# ---------------------------------------------------------------------------


@dataclass
class ParabolaSet:
    """General-position points (t, t^2 mod p) for t = 1..n, p prime >= n."""

    p: int
    points: list[GridPoint]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _next_prime(m: int) -> int:
    c = max(m, 2)
    while not _is_prime(c):
        c += 1
    return c


def parabola_pointset(n: int, verify: bool = True) -> ParabolaSet:
    """n points on the mod-p parabola, p the smallest prime >= n.

    Any collinear triple would force two parameters equal mod p, so the
    set is in general position; ``verify`` re-checks that with the kernel.
    """
    if n < 1:
        raise InvalidInstanceError("point set needs at least one point")
    p = _next_prime(n)
    points = [GridPoint(t, (t * t) % p) for t in range(1, n + 1)]
    if verify and find_collinear_triple(points) is not None:
        raise InternalInvariantError("parabola point set contains a collinear triple")
    return ParabolaSet(p=p, points=points)


# ---------------------------------------------------------------------------
# Outerplanar graphs onto fixed point sets
# ---------------------------------------------------------------------------

#: One layer's bijection: position v holds the point index of vertex v.
PointAssignment = list[int]


def _angular_sort(
    pts: list[GridPoint], pivot: int, others: list[int], side: int
) -> list[int]:
    # Sort point indices by angle around the pivot, sweeping from the side's
    # boundary ray; all candidates lie strictly on one side, so the exact
    # orientation predicate is a total comparator.
    def cmp(s: int, t: int) -> int:
        return -side * orient(pts[pivot], pts[s], pts[t])

    return sorted(others, key=cmp_to_key(cmp))


def _one_side_of(pts: list[GridPoint], a: int, b: int, subset: list[int]) -> bool:
    signs = {orient(pts[a], pts[b], pts[s]) for s in subset}
    return 0 not in signs and len(signs) <= 1


def embed_outerplanar_on_points(layer: Layer, pts: list[GridPoint]) -> list[int]:
    """Map a maximal outerplanar graph onto general-position points without
    crossings; returns point index per vertex.

    Recursive split: the designated outer-cycle edge sits on a hull edge
    (p, q); the apex of its internal triangle goes to a split point r
    chosen by angular rank so that both subproblems again have their edge
    on their own hull.  Two symmetric candidate ranks cover the choice; a
    verified full scan backs them up, and the hull-edge invariant is
    asserted on entry to every subproblem.
    """
    k = len(pts)
    validate_layer(layer, k)
    if layer.kind != "outerplanar" or layer.outer_cycle is None:
        raise InvalidInstanceError("point-set embedding expects an outerplanar layer")
    if find_collinear_triple(pts) is not None:
        raise InvalidInstanceError("points are not in general position")
    if k == 1:
        return [0]
    if k == 2:
        return [0, 1]
    if len(layer.edges) != 2 * k - 3:
        raise InvalidInstanceError(
            "point-set embedding expects a maximal outerplanar layer (E = 2n-3)"
        )
    cyc = layer.outer_cycle
    pos = {v: i for i, v in enumerate(cyc)}
    edge_set = {frozenset(e) for e in layer.edges}
    for i in range(k):
        if frozenset((cyc[i], cyc[(i + 1) % k])) not in edge_set:
            raise InvalidInstanceError("maximal outerplanar layer is missing a cycle edge")
    adj = [set() for _ in range(k)]
    for u, v in layer.edges:
        adj[u].add(v)
        adj[v].add(u)

    hull = convex_hull(pts)
    hull_edges = [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]
    best = min(
        hull_edges,
        key=lambda e: tuple(sorted(((pts[e[0]].x, pts[e[0]].y), (pts[e[1]].x, pts[e[1]].y)))),
    )
    p_idx, q_idx = best
    if (pts[q_idx].x, pts[q_idx].y) < (pts[p_idx].x, pts[p_idx].y):
        p_idx, q_idx = q_idx, p_idx

    chain = [cyc[0]] + cyc[:0:-1]
    phi = [-1] * k
    _embed_chain(pts, adj, phi, chain, list(range(k)), p_idx, q_idx)
    if sorted(phi) != list(range(k)):
        raise InternalInvariantError("point assignment is not a bijection")
    return phi


def _embed_chain(
    pts: list[GridPoint],
    adj: list[set[int]],
    phi: list[int],
    chain: list[int],
    point_idxs: list[int],
    p_i: int,
    q_i: int,
) -> None:
    phi[chain[0]] = p_i
    phi[chain[-1]] = q_i
    if len(chain) == 2:
        return
    u, v = chain[0], chain[-1]
    apexes = [w for w in chain[1:-1] if w in adj[u] and w in adj[v]]
    if len(apexes) != 1:
        raise InvalidInstanceError(
            f"edge ({u},{v}) must close exactly one triangle inside its chain"
        )
    w = apexes[0]
    j = chain.index(w)
    n_a = j - 1
    n_b = len(chain) - 2 - j

    others = [i for i in point_idxs if i != p_i and i != q_i]
    sides = {orient(pts[p_i], pts[q_i], pts[s]) for s in others}
    if 0 in sides or len(sides) > 1:
        raise HullEdgeInvariantError(
            "designated edge is not a hull edge of its point subset"
        )
    side = sides.pop()

    split = _select_split(pts, others, p_i, q_i, side, n_a, n_b)
    if split is None:
        raise HullEdgeInvariantError(
            "no valid split point for the designated hull edge"
        )
    r, part_a, part_b = split
    _embed_chain(pts, adj, phi, chain[: j + 1], [p_i, r] + part_a, p_i, r)
    _embed_chain(pts, adj, phi, chain[j:], [r, q_i] + part_b, r, q_i)


def _select_split(
    pts: list[GridPoint],
    others: list[int],
    p_i: int,
    q_i: int,
    side: int,
    n_a: int,
    n_b: int,
) -> Optional[tuple[int, list[int], list[int]]]:
    """Pick the apex point r and the two point subsets.

    A valid split is a line through r, crossing the open segment pq, with
    p plus n_a points strictly on one side and q plus n_b points strictly
    on the other, such that (p, r) and (r, q) are hull edges of their
    sides.  The line keeps the two sub-hulls disjoint except at r, so the
    sub-drawings cannot interfere.
    """
    # Fast candidate: r at angular rank n_b+1 around p, larger angles with
    # p.  The separating line is p-r nudged off p, so only (r, q) needs a
    # check.
    by_p = _angular_sort(pts, p_i, others, side)
    r = by_p[n_b]
    part_a, part_b = by_p[n_b + 1 :], by_p[:n_b]
    if _one_side_of(pts, r, q_i, part_b):
        return r, part_a, part_b

    # Mirror candidate around q: smaller q-angles with p, only (p, r)
    # needs a check.
    by_q = _angular_sort(pts, q_i, others, -side)
    r = by_q[n_a]
    part_a, part_b = by_q[:n_a], by_q[n_a + 1 :]
    if _one_side_of(pts, p_i, r, part_a):
        return r, part_a, part_b

    # Full sweep: every combinatorially distinct separating line through
    # every candidate r arises as the line through r and a witness point w,
    # nudged to put w on either side.  General position means only w sits
    # on that line, so these assignments cover every split the line family
    # can produce; p with A and q with B forces the orientation.
    for r in sorted(others, key=lambda i: (pts[i].x, pts[i].y)):
        rest = [i for i in others if i != r]
        everyone = rest + [p_i, q_i]
        for w in sorted(everyone, key=lambda i: (pts[i].x, pts[i].y)):
            for w_left in (True, False):
                left = {
                    x
                    for x in everyone
                    if x != w and orient(pts[r], pts[w], pts[x]) > 0
                }
                if w_left:
                    left.add(w)
                if p_i in left and q_i not in left:
                    part_a = [x for x in rest if x in left]
                elif q_i in left and p_i not in left:
                    part_a = [x for x in rest if x not in left]
                else:
                    continue
                part_b = [x for x in rest if x not in part_a]
                if len(part_a) != n_a:
                    continue
                if not _one_side_of(pts, p_i, r, part_a):
                    continue
                if not _one_side_of(pts, r, q_i, part_b):
                    continue
                return r, part_a, part_b
    return None


def brute_force_point_assignment(
    layer: Layer, pts: list[GridPoint]
) -> Optional[list[int]]:
    """Exhaustively search crossing-free bijections vertex -> point.

    Independent of the recursive embedder: works on any layer's edge set,
    returns the lexicographically first solution or None.  Limited to 9
    points.
    """
    k = len(pts)
    if k > 9:
        raise SearchBudgetError("brute-force assignment is limited to 9 points")
    validate_layer(layer, k)
    edges = layer.edges
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    by_level: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for u, v in edges:
        by_level[max(u, v)].append((u, v))

    phi = [-1] * k
    used = [False] * k
    placed: list[tuple[int, int, int, int]] = []

    def dfs(lvl: int) -> bool:
        if lvl == k:
            return True
        for pt in range(k):
            if used[pt]:
                continue
            phi[lvl] = pt
            used[pt] = True
            new_segs = []
            ok = True
            for u, v in by_level[lvl]:
                seg = (xs[phi[u]], ys[phi[u]], xs[phi[v]], ys[phi[v]])
                for old in placed + new_segs:
                    if _conflict_raw(*old, *seg):
                        ok = False
                        break
                if not ok:
                    break
                new_segs.append(seg)
            if ok:
                placed.extend(new_segs)
                if dfs(lvl + 1):
                    return True
                del placed[len(placed) - len(new_segs) :]
            used[pt] = False
        phi[lvl] = -1
        return False

    if dfs(0):
        return list(phi)
    return None


# ---------------------------------------------------------------------------
# Composition pipelines
# ---------------------------------------------------------------------------


def simul_embed_planar_outerplanar(
    g1: Layer, g2: Layer, n: int
) -> SimultaneousEmbedding:
    """Embed a plane graph and an outerplanar graph on one point set.

    The plane graph is drawn in general position; the outerplanar graph is
    maximalized and embedded onto those points.  Layer edge lists keep
    their own index spaces; the returned assignments map them onto the
    shared points (identity for the plane layer).
    """
    validate_layer(g1, n)
    validate_layer(g2, n)
    if g1.kind != "planar":
        raise InvalidInstanceError("first layer must be a plane graph with rotation")
    if g2.kind != "outerplanar":
        raise InvalidInstanceError("second layer must be outerplanar")
    pts = planar_general_position_draw(g1, n)
    maxed, _dummies = maximalize_outerplanar(g2, n)
    phi2 = embed_outerplanar_on_points(maxed, pts)
    coords, width, height = _translate_to_origin(pts)
    return SimultaneousEmbedding(
        coords=coords,
        layers=[list(g1.edges), list(g2.edges)],
        width=width,
        height=height,
        assignments=[list(range(n)), phi2],
    )


def simul_embed_outerplanars(layers: list[Layer], n: int) -> SimultaneousEmbedding:
    """Embed any number of outerplanar graphs on one parabola point set.

    The shared grid stays within p x p for p the smallest prime >= n.
    """
    if not layers:
        raise InvalidInstanceError("need at least one layer")
    for layer in layers:
        validate_layer(layer, n)
        if layer.kind != "outerplanar":
            raise InvalidInstanceError("all layers must be outerplanar")
    ps = parabola_pointset(n)
    assignments = []
    for layer in layers:
        maxed, _dummies = maximalize_outerplanar(layer, n)
        assignments.append(embed_outerplanar_on_points(maxed, ps.points))
    coords, width, height = _translate_to_origin(ps.points)
    return SimultaneousEmbedding(
        coords=coords,
        layers=[list(layer.edges) for layer in layers],
        width=width,
        height=height,
        assignments=assignments,
    )
