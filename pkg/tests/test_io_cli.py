import json
import random

import pytest

from simembed import (
    Layer,
    LayeredInstance,
    ParseError,
    PathOrder,
    cli_main,
    embed_two_paths,
    generate,
    parse_instance,
    parse_result,
    render_svg,
    serialize_instance,
    serialize_result,
)
from simembed.generate import KINDS


MINIMAL_TWO_PATHS = json.dumps(
    {
        "n": 3,
        "mapping": "given",
        "layers": [
            {"class": "path", "edges": [[0, 1], [1, 2]]},
            {"class": "path", "edges": [[2, 0], [0, 1]]},
        ],
    }
)


def test_parse_minimal_two_paths():
    inst = parse_instance(MINIMAL_TWO_PATHS)
    assert inst.n == 3
    assert [l.kind for l in inst.layers] == ["path", "path"]


def test_parse_rejects_unknown_fields():
    doc = json.loads(MINIMAL_TWO_PATHS)
    doc["surprise"] = 1
    with pytest.raises(ParseError):
        parse_instance(json.dumps(doc))
    doc = json.loads(MINIMAL_TWO_PATHS)
    doc["layers"][0]["color"] = "red"
    with pytest.raises(ParseError):
        parse_instance(json.dumps(doc))


def test_parse_rejects_planar_without_rotation():
    doc = {
        "n": 3,
        "mapping": "given",
        "layers": [{"class": "planar", "edges": [[0, 1], [1, 2], [2, 0]]}],
    }
    with pytest.raises(ParseError):
        parse_instance(json.dumps(doc))


def test_parse_rejects_malformed_json():
    with pytest.raises(ParseError):
        parse_instance("{not json")


def test_parse_accepts_bytes():
    inst = parse_instance(MINIMAL_TWO_PATHS.encode("utf-8"))
    assert inst.n == 3


def random_instance(seed):
    rng = random.Random(seed)
    n = rng.randrange(3, 15)
    kind = rng.choice(KINDS)
    layer = generate(kind, n, seed)
    mapping = "free" if layer.kind in ("planar", "outerplanar") else "given"
    second = generate(kind, n, seed + 1)
    return LayeredInstance(n=n, layers=[layer, second], mapping=mapping)


def test_serialize_parse_roundtrip():
    for seed in range(100):
        inst = random_instance(seed)
        text = serialize_instance(inst)
        again = parse_instance(text)
        assert serialize_instance(again) == text


def test_result_document_roundtrip():
    emb = embed_two_paths(PathOrder([0, 1, 2]), PathOrder([1, 2, 0]))
    text = serialize_result(emb)
    again, cert = parse_result(text, emb.layers)
    assert cert is None
    assert [(p.x, p.y) for p in again.coords] == [(p.x, p.y) for p in emb.coords]
    assert (again.width, again.height) == (emb.width, emb.height)


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------


def test_svg_two_path_structure():
    emb = embed_two_paths(
        PathOrder([0, 1, 2, 3, 4, 5, 6]), PathOrder([1, 4, 0, 3, 2, 5, 6])
    )
    svg = render_svg(emb)
    assert svg.count("<g id=\"layer-") == 2
    assert svg.count("<line") == 12
    assert svg.count("<circle") == 7
    assert render_svg(emb) == svg  # deterministic


def test_svg_single_vertex():
    from simembed import SimultaneousEmbedding, GridPoint

    emb = SimultaneousEmbedding(coords=[GridPoint(1, 1)], layers=[[]], width=1, height=1)
    svg = render_svg(emb)
    assert svg.count("<circle") == 1
    assert svg.count("<line") == 0


def test_svg_three_layers():
    n = 8
    path = Layer("outerplanar", [(i, i + 1) for i in range(n - 1)], outer_cycle=list(range(n)))
    star = Layer("outerplanar", [(0, i) for i in range(1, n)], outer_cycle=list(range(n)))
    cyc = Layer("outerplanar", [(i, (i + 1) % n) for i in range(n)], outer_cycle=list(range(n)))
    from simembed import simul_embed_outerplanars

    emb = simul_embed_outerplanars([path, star, cyc], n)
    svg = render_svg(emb)
    assert svg.count("<g id=\"layer-") == 3


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def test_generate_is_deterministic_and_valid():
    from simembed import (
        as_path,
        caterpillar_decompose,
        check_plane_embedding,
        maximalize_outerplanar,
    )

    for seed in (0, 1, 17):
        assert generate("path", 9, seed).edges == generate("path", 9, seed).edges
        as_path(generate("path", 5, seed), 5)
        caterpillar_decompose(generate("caterpillar", 20, seed), 20)
        lay = generate("plane-triangulation", 15, seed)
        assert check_plane_embedding(lay, 15) == 2 * 15 - 4
        _aug, dummies = maximalize_outerplanar(generate("maximal-outerplanar", 15, seed), 15)
        assert dummies == []


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def test_cli_embed_certify_render_roundtrip(tmp_path):
    inst_file = tmp_path / "inst.json"
    out_file = tmp_path / "result.json"
    svg_file = tmp_path / "drawing.svg"
    inst_file.write_text(MINIMAL_TWO_PATHS, encoding="utf-8")

    rc = cli_main(
        ["embed", "--in", str(inst_file), "--out", str(out_file), "--svg", str(svg_file)]
    )
    assert rc == 0
    doc = json.loads(out_file.read_text(encoding="utf-8"))
    assert doc["certificate"]["ok"] is True
    assert svg_file.read_text(encoding="utf-8").startswith("<?xml")

    rc = cli_main(
        ["certify", "--in", str(out_file), "--instance", str(inst_file), "--out", "-"]
    )
    assert rc == 0

    rc = cli_main(
        [
            "render",
            "--in", str(out_file),
            "--instance", str(inst_file),
            "--svg", str(tmp_path / "again.svg"),
        ]
    )
    assert rc == 0


def test_cli_gen_then_embed_all_kinds(tmp_path):
    for kind, n in (
        ("two-paths", 9),
        ("two-caterpillars", 8),
        ("path-caterpillar", 10),
        ("outerplanars", 7),
        ("planar-outerplanar", 7),
    ):
        inst_file = tmp_path / f"{kind}.json"
        out_file = tmp_path / f"{kind}-result.json"
        rc = cli_main(
            ["gen", "--kind", kind, "--n", str(n), "--seed", "3", "--out", str(inst_file)]
        )
        assert rc == 0
        rc = cli_main(["embed", "--in", str(inst_file), "--out", str(out_file)])
        assert rc == 0, kind
        doc = json.loads(out_file.read_text(encoding="utf-8"))
        assert doc["certificate"]["ok"] is True, kind


def test_cli_embed_reversed_layer_orders(tmp_path):
    from simembed import generate as gen_layer
    from simembed.documents import instance_to_json

    # caterpillar first, path second
    n = 8
    cat = gen_layer("caterpillar", n, 1)
    path = gen_layer("path", n, 2)
    inst = LayeredInstance(n=n, layers=[cat, path], mapping="given")
    f = tmp_path / "cp.json"
    f.write_text(json.dumps(instance_to_json(inst)), encoding="utf-8")
    out = tmp_path / "cp-r.json"
    assert cli_main(["embed", "--in", str(f), "--out", str(out)]) == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["certificate"]["ok"] is True

    # outerplanar first, planar second
    outer = gen_layer("maximal-outerplanar", n, 3)
    plane = gen_layer("plane-triangulation", n, 4)
    inst = LayeredInstance(n=n, layers=[outer, plane], mapping="free")
    f2 = tmp_path / "op.json"
    f2.write_text(json.dumps(instance_to_json(inst)), encoding="utf-8")
    out2 = tmp_path / "op-r.json"
    assert cli_main(["embed", "--in", str(f2), "--out", str(out2)]) == 0
    doc2 = json.loads(out2.read_text(encoding="utf-8"))
    assert doc2["certificate"]["ok"] is True


def test_cli_rejects_unsupported_combination(tmp_path):
    doc = {
        "n": 4,
        "mapping": "given",
        "layers": [
            {
                "class": "planar",
                "edges": [[0, 1], [1, 2], [2, 0], [0, 3], [1, 3], [2, 3]],
                "rotation": [[1, 2, 3], [2, 0, 3], [0, 1, 3], [0, 2, 1]],
            },
            {
                "class": "planar",
                "edges": [[0, 1], [1, 2], [2, 0], [0, 3], [1, 3], [2, 3]],
                "rotation": [[1, 2, 3], [2, 0, 3], [0, 1, 3], [0, 2, 1]],
            },
        ],
    }
    inst_file = tmp_path / "two-planar.json"
    inst_file.write_text(json.dumps(doc), encoding="utf-8")
    rc = cli_main(["embed", "--in", str(inst_file), "--out", str(tmp_path / "r.json")])
    assert rc == 2


def test_cli_io_error_exit_code(tmp_path):
    rc = cli_main(["embed", "--in", str(tmp_path / "missing.json"), "--out", "-"])
    assert rc == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{oops", encoding="utf-8")
    assert cli_main(["embed", "--in", str(bad), "--out", "-"]) == 1


def test_cli_usage_errors(tmp_path):
    inst_file = tmp_path / "inst.json"
    inst_file.write_text(MINIMAL_TWO_PATHS, encoding="utf-8")
    rc = cli_main(["embed", "--in", str(inst_file), "--out", "-", "--bounds", "banana"])
    assert rc == 1
    rc = cli_main(["embed", "--in", str(inst_file), "--out", str(tmp_path / "r.json"), "--bounds", "3x3"])
    assert rc == 0


def test_cli_fivepaths_sampled(tmp_path):
    out = tmp_path / "sampled.json"
    rc = cli_main(["fivepaths", "--grid", "12", "--samples", "300", "--seed", "9", "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["search"]["exhaustive"] is False
    assert doc["search"]["counterexample"] is None


def test_cli_fivepaths_verdict(tmp_path):
    out_file = tmp_path / "five.json"
    rc = cli_main(["fivepaths", "--grid", "4", "--out", str(out_file)])
    assert rc == 0
    doc = json.loads(out_file.read_text(encoding="utf-8"))
    assert doc["coverage"]["all_covered"] is True
    assert doc["search"]["counterexample"] is None
    assert "no counterexample" in doc["verdict"]


def test_cli_env_seed(tmp_path, monkeypatch):
    monkeypatch.setenv("SIMEMBED_SEED", "42")
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert cli_main(["gen", "--kind", "two-paths", "--n", "6", "--out", str(a)]) == 0
    assert cli_main(["gen", "--kind", "two-paths", "--n", "6", "--out", str(b)]) == 0
    assert a.read_text(encoding="utf-8") == b.read_text(encoding="utf-8")
    monkeypatch.setenv("SIMEMBED_SEED", "43")
    c = tmp_path / "c.json"
    assert cli_main(["gen", "--kind", "two-paths", "--n", "6", "--out", str(c)]) == 0
    assert a.read_text(encoding="utf-8") != c.read_text(encoding="utf-8")
