import random

import pytest

from simembed import (
    FIVE_PATHS,
    Caterpillar,
    GridPoint,
    InvalidInstanceError,
    Layer,
    LayeredInstance,
    PairCoverage,
    PathOrder,
    SearchBudgetError,
    caterpillar_decompose,
    certify_embedding,
    certify_general_position,
    embed_path_caterpillar,
    embed_two_caterpillars,
    embed_two_paths,
    exhaustive_five_point_check,
    find_collinear_triple,
    five_path_pair_coverage,
    generate,
    orient,
    path_from_digits,
    refine_general_position,
)

P = GridPoint


def instance_for(layers_edges, n, kinds=None):
    kinds = kinds or ["path"] * len(layers_edges)
    return LayeredInstance(
        n=n, layers=[Layer(k, e) for k, e in zip(kinds, layers_edges)]
    )


# ---------------------------------------------------------------------------
# two paths
# ---------------------------------------------------------------------------


def test_two_paths_scrambled_fixture():
    p1 = PathOrder([0, 1, 2, 3, 4, 5, 6])
    p2 = PathOrder([1, 4, 0, 3, 2, 5, 6])
    emb = embed_two_paths(p1, p2)
    assert [(q.x, q.y) for q in emb.coords] == [
        (1, 3), (2, 1), (3, 5), (4, 4), (5, 2), (6, 6), (7, 7),
    ]
    assert emb.width == emb.height == 7


def test_two_paths_identity_diagonal():
    p = PathOrder([0, 1, 2])
    emb = embed_two_paths(p, PathOrder([0, 1, 2]))
    assert [(q.x, q.y) for q in emb.coords] == [(1, 1), (2, 2), (3, 3)]


def test_two_paths_mismatch_rejected():
    with pytest.raises(InvalidInstanceError):
        embed_two_paths(PathOrder([0, 1, 2]), PathOrder([0, 1]))


def test_two_paths_random_certified():
    rng = random.Random(0)
    for _ in range(25):
        n = rng.randrange(2, 51)
        o1, o2 = list(range(n)), list(range(n))
        rng.shuffle(o1)
        rng.shuffle(o2)
        emb = embed_two_paths(PathOrder(o1), PathOrder(o2))
        inst = instance_for([emb.layers[0], emb.layers[1]], n)
        assert certify_embedding(emb, inst, bounds=(n, n)).ok


def test_two_paths_monotone_layers():
    rng = random.Random(1)
    n = 30
    o1, o2 = list(range(n)), list(range(n))
    rng.shuffle(o1)
    rng.shuffle(o2)
    emb = embed_two_paths(PathOrder(o1), PathOrder(o2))
    xs = [emb.coords[v].x for v in o1]
    ys = [emb.coords[v].y for v in o2]
    assert xs == sorted(xs) and ys == sorted(ys)


# ---------------------------------------------------------------------------
# general-position refinement
# ---------------------------------------------------------------------------


def test_refine_two_points_unchanged_up_to_scaling():
    out = refine_general_position([P(1, 2), P(3, 1)], 4)
    m = 4
    assert [(p.x, p.y) for p in out] == [
        (1 * (2 * m + 1), 2 * (2 * m * m + 1)),
        (3 * (2 * m + 1), 1 * (2 * m * m + 1)),
    ]


def test_refine_breaks_diagonal():
    out = refine_general_position([P(0, 0), P(1, 1), P(2, 2)], 3)
    assert find_collinear_triple(out) is None
    m = 3
    for src, dst in zip([P(0, 0), P(1, 1), P(2, 2)], out):
        assert abs(dst.x - src.x * (2 * m + 1)) <= m
        assert abs(dst.y - src.y * (2 * m * m + 1)) <= m * m


def test_refine_random_properties():
    rng = random.Random(2)
    for trial in range(20):
        extent = rng.randrange(5, 31)
        count = rng.randrange(3, extent + 1)
        base = []
        seen = set()
        while len(base) < count:
            c = (rng.randrange(extent + 1), rng.randrange(extent + 1))
            if c not in seen:
                seen.add(c)
                base.append(P(*c))
        out = refine_general_position(base, extent)
        assert certify_general_position(out).ok
        m = max(extent, count)
        for src, dst in zip(base, out):
            assert abs(dst.x - src.x * (2 * m + 1)) <= m
            assert abs(dst.y - src.y * (2 * m * m + 1)) <= m * m
        for i in range(count):
            for j in range(count):
                if base[i].x < base[j].x:
                    assert out[i].x < out[j].x
                if base[i].y < base[j].y:
                    assert out[i].y < out[j].y


def test_refine_rejects_bad_input():
    with pytest.raises(InvalidInstanceError):
        refine_general_position([P(0, 0), P(0, 0)], 5)
    with pytest.raises(InvalidInstanceError):
        refine_general_position([P(99, 0)], 5)


# ---------------------------------------------------------------------------
# caterpillars
# ---------------------------------------------------------------------------


def caterpillar_instance(c1, c2, n):
    return LayeredInstance(
        n=n,
        layers=[
            Layer("caterpillar", c1.edges()),
            Layer("caterpillar", c2.edges()),
        ],
    )


def test_two_caterpillars_legless_reduces_to_paths():
    c1 = Caterpillar([0, 1, 2], [[], [], []])
    c2 = Caterpillar([2, 0, 1], [[], [], []])
    emb = embed_two_caterpillars(c1, c2)
    assert certify_embedding(emb, caterpillar_instance(c1, c2, 3)).ok
    n = 3
    assert emb.width <= n * (2 * n + 1) and emb.height <= n * (2 * n * n + 1)


def test_two_caterpillars_star_and_path():
    c1 = Caterpillar([0], [[1, 2, 3, 4]])
    c2 = Caterpillar([3, 1, 0, 4, 2], [[], [], [], [], []])
    emb = embed_two_caterpillars(c1, c2)
    assert certify_embedding(emb, caterpillar_instance(c1, c2, 5)).ok


def test_two_caterpillars_random_certified_within_bounds():
    for seed in range(12):
        n = 40
        c1 = caterpillar_decompose(generate("caterpillar", n, seed), n)
        c2 = caterpillar_decompose(generate("caterpillar", n, seed + 500), n)
        emb = embed_two_caterpillars(c1, c2)
        assert certify_embedding(emb, caterpillar_instance(c1, c2, n)).ok
        assert emb.width <= n * (2 * n + 1)
        assert emb.height <= n * (2 * n * n + 1)
        assert certify_general_position(emb.coords).ok


# ---------------------------------------------------------------------------
# path + caterpillar
# ---------------------------------------------------------------------------


def pc_instance(p, cat, n):
    return LayeredInstance(
        n=n,
        layers=[Layer("path", p.edges()), Layer("caterpillar", cat.edges())],
    )


def test_path_caterpillar_fixture():
    p = PathOrder([0, 1, 2, 3])
    cat = Caterpillar([0, 1, 2], [[], [3], []])
    assert orient(P(4, 2), P(6, 3), P(5, 4)) != 0
    emb, shifts = embed_path_caterpillar(p, cat)
    assert [(q.x, q.y) for q in emb.coords] == [(2, 1), (4, 2), (6, 3), (5, 4)]
    assert shifts == 0
    assert certify_embedding(emb, pc_instance(p, cat, 4)).ok


def test_path_caterpillar_no_legs():
    p = PathOrder([2, 0, 1])
    cat = Caterpillar([1, 0, 2], [[], [], []])
    emb, shifts = embed_path_caterpillar(p, cat)
    assert shifts == 0
    assert all(q.x % 2 == 0 for q in emb.coords)
    assert certify_embedding(emb, pc_instance(p, cat, 3)).ok


def test_path_caterpillar_forced_shift():
    # leg of the first spine vertex sits exactly on the segment to the next:
    # spine s0, s1 with one leg under s0 placed at the midpoint row
    p = PathOrder([0, 2, 1])  # y: s0=1, leg=2, s1=3
    cat = Caterpillar([0, 1], [[2], []])
    emb, shifts = embed_path_caterpillar(p, cat)
    assert shifts == 1
    assert certify_embedding(emb, pc_instance(p, cat, 3)).ok
    # width grows by exactly the shift count
    assert emb.width == 4 + shifts


def test_path_caterpillar_random_certified_with_bounds():
    rng = random.Random(3)
    for seed in range(25):
        n = rng.randrange(2, 61)
        lay = generate("caterpillar", n, seed)
        cat = caterpillar_decompose(lay, n)
        order = list(range(n))
        rng.shuffle(order)
        p = PathOrder(order)
        emb, shifts = embed_path_caterpillar(p, cat)
        k = cat.leg_count()
        assert shifts <= k
        assert emb.width <= 2 * n - k
        assert emb.height == n
        assert certify_embedding(emb, pc_instance(p, cat, n)).ok
        # path layer stays y-monotone after shifting
        ys = [emb.coords[v].y for v in order]
        assert ys == sorted(ys)


# ---------------------------------------------------------------------------
# five paths
# ---------------------------------------------------------------------------


def test_pair_coverage_of_the_five_paths():
    paths = [path_from_digits(d) for d in FIVE_PATHS]
    cov = five_path_pair_coverage(paths)
    assert len(cov.pairs) == 15
    assert cov.all_covered
    assert cov.per_path_counts(5) == [3, 3, 3, 3, 3]
    assert all(len(c) == 1 for c in cov.covered_by)


def test_single_path_eliminates_three_pairs():
    cov = five_path_pair_coverage([path_from_digits("12345")])
    covered = {
        PairCoverage.label(pair)
        for pair, paths in zip(cov.pairs, cov.covered_by)
        if paths
    }
    assert covered == {"12-34", "12-45", "23-45"}


def test_dropping_any_path_loses_coverage():
    paths = [path_from_digits(d) for d in FIVE_PATHS]
    for drop in range(5):
        cov = five_path_pair_coverage([p for i, p in enumerate(paths) if i != drop])
        assert not cov.all_covered


def test_exhaustive_check_small_grid():
    paths = [path_from_digits(d) for d in FIVE_PATHS]
    res = exhaustive_five_point_check(4, paths)
    assert res.counterexample is None
    assert res.exhaustive


def test_exhaustive_check_four_paths_find_witness():
    from simembed import SimultaneousEmbedding

    paths = [path_from_digits(d) for d in FIVE_PATHS[:4]]
    res = exhaustive_five_point_check(5, paths)
    assert res.counterexample is not None
    pts = res.counterexample
    assert find_collinear_triple(pts) is None
    layers = [p.edges() for p in paths]
    emb = SimultaneousEmbedding(coords=pts, layers=layers, width=5, height=5)
    assert certify_embedding(emb, instance_for(layers, 5)).ok


def test_exhaustive_check_degenerate_column():
    paths = [path_from_digits(d) for d in FIVE_PATHS]
    res = exhaustive_five_point_check((1, 5), paths)
    assert res.counterexample is None
    assert res.placements_checked == 0


def test_search_budget_and_sampling():
    paths = [path_from_digits(d) for d in FIVE_PATHS]
    with pytest.raises(SearchBudgetError):
        exhaustive_five_point_check(9, paths)
    res = exhaustive_five_point_check(9, paths, seed=1, samples=200)
    assert not res.exhaustive
    assert res.placements_checked == 200  # five paths never embed
