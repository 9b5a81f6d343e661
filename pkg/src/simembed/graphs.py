"""Graph layers, class validators, and the structural reductions.

A :class:`Layer` is one edge set of a layered instance together with the
side data its class needs (a rotation system for plane graphs, the outer
cycle for outerplanar ones).  The functions here validate layers against
their declared class and compute the decompositions the embedders consume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InternalInvariantError, InvalidInstanceError

LAYER_CLASSES = ("path", "caterpillar", "outerplanar", "planar")


@dataclass
class Layer:
    kind: str
    edges: list[tuple[int, int]]
    rotation: Optional[list[list[int]]] = None
    outer_cycle: Optional[list[int]] = None


@dataclass
class LayeredInstance:
    """Shared vertex count, one or more edge layers, and the mapping mode.

    With mapping "given" every layer lives on the common index space
    0..n-1.  With mapping "free" each layer has its own n-vertex index
    space and the embedders return the bijections.
    """

    n: int
    layers: list[Layer]
    mapping: str = "given"
    labels: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.labels:
            self.labels = [f"v{i + 1}" for i in range(self.n)]


@dataclass
class PathOrder:
    """A path given as the linear order of its vertices."""

    order: list[int]

    @property
    def n(self) -> int:
        return len(self.order)

    def edges(self) -> list[tuple[int, int]]:
        return [(self.order[i], self.order[i + 1]) for i in range(len(self.order) - 1)]


@dataclass
class Caterpillar:
    """Spine vertices in order plus, per spine vertex, its legs in order."""

    spine: list[int]
    legs: list[list[int]]

    def __post_init__(self) -> None:
        if len(self.legs) != len(self.spine):
            raise InvalidInstanceError("one leg list per spine vertex required")
        seen: set[int] = set()
        for v in self.spine:
            if v in seen:
                raise InvalidInstanceError(f"vertex {v} repeated in caterpillar")
            seen.add(v)
        for legs in self.legs:
            for v in legs:
                if v in seen:
                    raise InvalidInstanceError(f"vertex {v} repeated in caterpillar")
                seen.add(v)

    @property
    def n(self) -> int:
        return len(self.spine) + sum(len(l) for l in self.legs)

    def leg_count(self) -> int:
        return sum(len(l) for l in self.legs)

    def edges(self) -> list[tuple[int, int]]:
        out = [(self.spine[i], self.spine[i + 1]) for i in range(len(self.spine) - 1)]
        for parent, legs in zip(self.spine, self.legs):
            out.extend((parent, leg) for leg in legs)
        return out


def validate_layer(layer: Layer, n: int) -> None:
    """Structural checks: simple edges in range, class side data present."""
    if layer.kind not in LAYER_CLASSES:
        raise InvalidInstanceError(f"unknown layer class {layer.kind!r}")
    seen: set[frozenset[int]] = set()
    for u, v in layer.edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInstanceError(f"edge ({u},{v}) out of vertex range 0..{n - 1}")
        if u == v:
            raise InvalidInstanceError(f"loop at vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise InvalidInstanceError(f"duplicate edge ({u},{v})")
        seen.add(key)
    if layer.kind == "planar":
        if layer.rotation is None:
            raise InvalidInstanceError("planar layer requires a rotation system")
        _validate_rotation(layer, n)
    if layer.kind == "outerplanar":
        if layer.outer_cycle is None:
            raise InvalidInstanceError("outerplanar layer requires its outer cycle")
        if sorted(layer.outer_cycle) != list(range(n)):
            raise InvalidInstanceError("outer cycle must visit every vertex exactly once")


def _validate_rotation(layer: Layer, n: int) -> None:
    rotation = layer.rotation
    assert rotation is not None
    if len(rotation) != n:
        raise InvalidInstanceError("rotation must list neighbor orders for all vertices")
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v in layer.edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    for v in range(n):
        if sorted(rotation[v]) != sorted(neighbors[v]):
            raise InvalidInstanceError(
                f"rotation at vertex {v} is not a permutation of its neighbors"
            )


def validate_instance(inst: LayeredInstance) -> None:
    if inst.n < 1:
        raise InvalidInstanceError("instance needs at least one vertex")
    if inst.mapping not in ("given", "free"):
        raise InvalidInstanceError(f"mapping must be 'given' or 'free', got {inst.mapping!r}")
    if not inst.layers:
        raise InvalidInstanceError("instance needs at least one layer")
    if len(inst.labels) != inst.n:
        raise InvalidInstanceError("label count must equal vertex count")
    for layer in inst.layers:
        validate_layer(layer, inst.n)


def _adjacency(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _connected(n: int, adj: list[list[int]]) -> bool:
    if n == 0:
        return True
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def as_path(layer: Layer, n: int) -> PathOrder:
    """Recover the linear order of a path layer.

    The returned order starts at the lower-indexed endpoint.  Raises for
    cycles, branch vertices, and disconnected layers.
    """
    validate_layer(layer, n)
    if len(layer.edges) != n - 1:
        raise InvalidInstanceError(f"path on {n} vertices needs {n - 1} edges")
    if n == 1:
        return PathOrder([0])
    adj = _adjacency(n, layer.edges)
    deg = [len(a) for a in adj]
    if any(d > 2 for d in deg):
        bad = next(v for v in range(n) if deg[v] > 2)
        raise InvalidInstanceError(f"not a path: branch vertex {bad}")
    ends = [v for v in range(n) if deg[v] == 1]
    if len(ends) != 2:
        raise InvalidInstanceError("not a path: contains a cycle or is disconnected")
    order = [min(ends)]
    prev = -1
    while len(order) < n:
        nxt = [w for w in adj[order[-1]] if w != prev]
        if not nxt:
            raise InvalidInstanceError("not a path: disconnected")
        prev = order[-1]
        order.append(nxt[0])
    return PathOrder(order)


def caterpillar_decompose(layer: Layer, n: int) -> Caterpillar:
    """Split a caterpillar layer into its spine and per-spine-vertex legs.

    The spine is the leaf-pruned tree, which must form a path; legs attach
    in input edge order.  A star prunes down to its center (spine length
    one), and the two-vertex path is treated as a star centered at the
    lower index.
    """
    validate_layer(layer, n)
    if len(layer.edges) != n - 1:
        raise InvalidInstanceError(f"tree on {n} vertices needs {n - 1} edges")
    adj = _adjacency(n, layer.edges)
    if not _connected(n, adj):
        raise InvalidInstanceError("not a tree: disconnected")
    if n == 1:
        return Caterpillar([0], [[]])
    deg = [len(a) for a in adj]
    spine_set = {v for v in range(n) if deg[v] >= 2}
    if not spine_set:
        # Single edge: both vertices are leaves.
        u, v = layer.edges[0]
        return Caterpillar([min(u, v)], [[max(u, v)]])
    pruned_deg = {v: sum(1 for w in adj[v] if w in spine_set) for v in spine_set}
    if any(d > 2 for d in pruned_deg.values()):
        bad = next(v for v in sorted(spine_set) if pruned_deg[v] > 2)
        raise InvalidInstanceError(
            f"not a caterpillar: pruned tree branches at vertex {bad}"
        )
    if len(spine_set) == 1:
        spine = [next(iter(spine_set))]
    else:
        endpoints = sorted(v for v in spine_set if pruned_deg[v] <= 1)
        if len(endpoints) != 2:
            raise InternalInvariantError("pruned tree of a tree must stay connected")
        spine = [endpoints[0]]
        prev = -1
        while True:
            nxt = [w for w in adj[spine[-1]] if w in spine_set and w != prev]
            if not nxt:
                break
            prev = spine[-1]
            spine.append(nxt[0])
        if len(spine) != len(spine_set):
            raise InternalInvariantError("pruned tree walk did not cover the spine")
    legs = [[w for w in adj[p] if deg[w] == 1] for p in spine]
    return Caterpillar(spine, legs)


def caterpillar_to_path(cat: Caterpillar) -> PathOrder:
    """Linearize a caterpillar: each spine vertex followed by its legs."""
    order: list[int] = []
    for parent, legs in zip(cat.spine, cat.legs):
        order.append(parent)
        order.extend(legs)
    return PathOrder(order)


def _trace_faces(
    n: int, edges: list[tuple[int, int]], rotation: list[list[int]]
) -> list[list[tuple[int, int]]]:
    """Walk all face cycles of a rotation system.

    Rotations list neighbors counterclockwise; the successor of dart (u, v)
    is (v, w) with w the predecessor of u in v's rotation.
    """
    pos = [{w: i for i, w in enumerate(rot)} for rot in rotation]
    darts = [(u, v) for u, v in edges] + [(v, u) for u, v in edges]
    unvisited = set(darts)
    faces: list[list[tuple[int, int]]] = []
    for start in darts:
        if start not in unvisited:
            continue
        walk = []
        cur = start
        while True:
            walk.append(cur)
            unvisited.discard(cur)
            u, v = cur
            rot = rotation[v]
            w = rot[(pos[v][u] - 1) % len(rot)]
            cur = (v, w)
            if cur == start:
                break
        faces.append(walk)
    return faces


def rotation_system_from_faces(n: int, faces: list[tuple[int, ...]]) -> list[list[int]]:
    """Derive the rotation system of a plane embedding from its oriented faces.

    Faces must be consistently oriented closed walks: at vertex v inside a
    face (..., prev, v, next, ...), the rotation successor of next is prev.
    """
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for face in faces:
        k = len(face)
        for i, v in enumerate(face):
            succ[v][face[(i + 1) % k]] = face[(i - 1) % k]
    rotation: list[list[int]] = []
    for v in range(n):
        if not succ[v]:
            rotation.append([])
            continue
        start = next(iter(succ[v]))
        cyc = [start]
        while True:
            w = succ[v].get(cyc[-1])
            if w is None:
                raise InvalidInstanceError(f"faces around vertex {v} do not close up")
            if w == start:
                break
            cyc.append(w)
        if len(cyc) != len(succ[v]):
            raise InvalidInstanceError(f"faces around vertex {v} split into several cycles")
        rotation.append(cyc)
    return rotation


def check_plane_embedding(layer: Layer, n: int) -> int:
    """Validate a rotation system via Euler's formula and return the face count."""
    validate_layer(layer, n)
    if layer.rotation is None:
        raise InvalidInstanceError("plane embedding check requires a rotation system")
    _validate_rotation(layer, n)
    adj = _adjacency(n, layer.edges)
    if not _connected(n, adj):
        raise InvalidInstanceError("plane embedding check requires a connected graph")
    faces = _trace_faces(n, layer.edges, layer.rotation)
    f = len(faces)
    if n - len(layer.edges) + f != 2:
        raise InvalidInstanceError(
            f"rotation is not a plane embedding: V-E+F = {n - len(layer.edges) + f}"
        )
    return f


def triangulate_plane(layer: Layer, n: int) -> tuple[Layer, list[tuple[int, int]]]:
    """Add chords until every face of the embedding is a triangle.

    Returns the augmented layer plus the list of added (dummy) edges so
    drawings can drop them afterwards.  Never creates parallel edges: a
    chord is only drawn between distinct, non-adjacent corners of a face.
    """
    check_plane_embedding(layer, n)
    if n < 3:
        raise InvalidInstanceError("triangulation needs at least 3 vertices")
    rotation = [list(r) for r in layer.rotation or []]
    edges = list(layer.edges)
    edge_set = {frozenset(e) for e in edges}
    dummies: list[tuple[int, int]] = []

    while True:
        faces = _trace_faces(n, edges, rotation)
        big = next((f for f in faces if len(f) > 3), None)
        if big is None:
            break
        # Corner i sits at vertex big[i][1], between darts big[i] and big[i+1].
        k = len(big)
        corner_vertex = [d[1] for d in big]
        chord = None
        for i in range(k):
            for j in range(i + 2, k):
                p, q = corner_vertex[i], corner_vertex[j]
                if p != q and frozenset((p, q)) not in edge_set:
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            raise InternalInvariantError(
                f"face of length {k} admits no chord; embedding is inconsistent"
            )
        i, j = chord
        p, q = corner_vertex[i], corner_vertex[j]
        # Insert each endpoint into the other's rotation at the corner gap:
        # placing the new neighbor right before the corner's in-dart source
        # keeps the rotation a plane embedding.
        rotation[p].insert(rotation[p].index(big[i][0]), q)
        rotation[q].insert(rotation[q].index(big[j][0]), p)
        edges.append((p, q))
        edge_set.add(frozenset((p, q)))
        dummies.append((p, q))

    if len(edges) != 3 * n - 6:
        raise InternalInvariantError(
            f"triangulation has {len(edges)} edges, expected {3 * n - 6}"
        )
    return Layer(kind="planar", edges=edges, rotation=rotation), dummies


def _chords_cross(n: int, pos_a: int, pos_b: int, pos_c: int, pos_d: int) -> bool:
    # Chords (a,b) and (c,d) of a cyclic order cross iff exactly one of c, d
    # lies strictly inside the arc from a to b.
    def inside(p: int) -> bool:
        return (p - pos_a) % n < (pos_b - pos_a) % n and p != pos_a

    in_c = inside(pos_c)
    in_d = inside(pos_d)
    return in_c != in_d


def maximalize_outerplanar(layer: Layer, n: int) -> tuple[Layer, list[tuple[int, int]]]:
    """Complete an outerplanar layer to a maximal outerplanar graph.

    Missing outer-cycle edges are added first, then every internal face is
    triangulated; all added edges are returned as dummies.  Rejects inputs
    whose chords cross with respect to the declared outer cycle.
    """
    validate_layer(layer, n)
    if layer.outer_cycle is None:
        raise InvalidInstanceError("maximalization requires the outer cycle")
    cyc = list(layer.outer_cycle)
    pos = {v: i for i, v in enumerate(cyc)}
    edges = list(layer.edges)
    edge_set = {frozenset(e) for e in edges}
    dummies: list[tuple[int, int]] = []

    if n <= 2:
        if n == 2 and frozenset((cyc[0], cyc[1])) not in edge_set:
            edges.append((cyc[0], cyc[1]))
            dummies.append((cyc[0], cyc[1]))
        return Layer(kind="outerplanar", edges=edges, outer_cycle=cyc), dummies

    chords = []
    for u, v in layer.edges:
        gap = (pos[v] - pos[u]) % n
        if gap != 1 and gap != n - 1:
            chords.append((u, v))
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            a, b = chords[i]
            c, d = chords[j]
            if len({a, b, c, d}) == 4 and _chords_cross(
                n, pos[a], pos[b], pos[c], pos[d]
            ):
                raise InvalidInstanceError(
                    f"chords ({a},{b}) and ({c},{d}) cross in the declared outer cycle"
                )

    for i in range(n):
        u, v = cyc[i], cyc[(i + 1) % n]
        if frozenset((u, v)) not in edge_set:
            edges.append((u, v))
            edge_set.add(frozenset((u, v)))
            dummies.append((u, v))

    # Convex-position rotation: neighbors ordered by cyclic distance.
    def build_rotation() -> list[list[int]]:
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return [
            sorted(neighbors[v], key=lambda w: (pos[w] - pos[v]) % n) for v in range(n)
        ]

    outer_dart = (cyc[1], cyc[0])
    while True:
        rotation = build_rotation()
        faces = _trace_faces(n, edges, rotation)
        outer = next(f for f in faces if outer_dart in f)
        big = next((f for f in faces if f is not outer and len(f) > 3), None)
        if big is None:
            break
        corner_vertex = [d[1] for d in big]
        k = len(big)
        chord = None
        for i in range(k):
            for j in range(i + 2, k):
                p, q = corner_vertex[i], corner_vertex[j]
                if p != q and frozenset((p, q)) not in edge_set:
                    chord = (p, q)
                    break
            if chord:
                break
        if chord is None:
            raise InternalInvariantError("internal face admits no chord")
        edges.append(chord)
        edge_set.add(frozenset(chord))
        dummies.append(chord)

    if len(edges) != 2 * n - 3:
        raise InternalInvariantError(
            f"maximal outerplanar graph has {len(edges)} edges, expected {2 * n - 3}"
        )
    return Layer(kind="outerplanar", edges=edges, outer_cycle=cyc), dummies
