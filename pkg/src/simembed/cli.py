"""Command-line surface.

Subcommands: ``embed`` (dispatch on layer classes and mapping mode),
``certify`` (re-check a result document), ``render`` (SVG), ``gen``
(random instances), and ``fivepaths`` (pair coverage plus the exhaustive
placement search).  Exit codes: 0 success with ok certificate, 2 the
instance is unsupported/invalid or a certificate failed, 1 usage or I/O
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import certify as certify_mod
from .documents import (
    parse_instance,
    parse_result,
    serialize_instance,
    serialize_result,
)
from .errors import ParseError, SimembedError, UnsupportedInstanceError
from .generate import generate
from .graphs import LayeredInstance, as_path, caterpillar_decompose, Layer
from .mapped import (
    FIVE_PATHS,
    SimultaneousEmbedding,
    embed_path_caterpillar,
    embed_two_caterpillars,
    embed_two_paths,
    exhaustive_five_point_check,
    five_path_pair_coverage,
    PairCoverage,
    path_from_digits,
)
from .svg import render_svg
from .unmapped import simul_embed_outerplanars, simul_embed_planar_outerplanar

SUPPORTED_GIVEN = "path+path, path+caterpillar, caterpillar+caterpillar"
SUPPORTED_FREE = "outerplanar (any number), planar+outerplanar"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _default_seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("SIMEMBED_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"SIMEMBED_SEED must be an integer, got {env!r}")
    return 0


def _parse_bounds(text: Optional[str]) -> Optional[tuple[int, int]]:
    if text is None:
        return None
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise ParseError(f"--bounds expects WxH, got {text!r}")


def _dispatch_embed(inst: LayeredInstance) -> SimultaneousEmbedding:
    kinds = [layer.kind for layer in inst.layers]
    if inst.mapping == "given":
        if len(kinds) != 2 or any(k in ("planar", "outerplanar") for k in kinds):
            raise UnsupportedInstanceError(
                f"no with-mapping embedder for classes {kinds}; "
                f"supported: {SUPPORTED_GIVEN}. Two planar layers with a given "
                "mapping cannot be simultaneously embedded in general."
            )
        l0, l1 = inst.layers
        if kinds == ["path", "path"]:
            return embed_two_paths(as_path(l0, inst.n), as_path(l1, inst.n))
        if kinds == ["path", "caterpillar"]:
            emb, _shifts = embed_path_caterpillar(
                as_path(l0, inst.n), caterpillar_decompose(l1, inst.n)
            )
            return emb
        if kinds == ["caterpillar", "path"]:
            emb, _shifts = embed_path_caterpillar(
                as_path(l1, inst.n), caterpillar_decompose(l0, inst.n)
            )
            emb.layers.reverse()
            return emb
        return embed_two_caterpillars(
            caterpillar_decompose(l0, inst.n), caterpillar_decompose(l1, inst.n)
        )
    # free mapping
    if all(k == "outerplanar" for k in kinds):
        return simul_embed_outerplanars(inst.layers, inst.n)
    if sorted(kinds) == ["outerplanar", "planar"]:
        if kinds[0] == "planar":
            return simul_embed_planar_outerplanar(inst.layers[0], inst.layers[1], inst.n)
        emb = simul_embed_planar_outerplanar(inst.layers[1], inst.layers[0], inst.n)
        emb.layers.reverse()
        assert emb.assignments is not None
        emb.assignments.reverse()
        return emb
    raise UnsupportedInstanceError(
        f"no without-mapping embedder for classes {kinds}; supported: {SUPPORTED_FREE}"
    )


def _cmd_embed(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.infile))
    emb = _dispatch_embed(inst)
    bounds = _parse_bounds(args.bounds)
    report = certify_mod.certify_embedding(emb, inst, bounds=bounds)
    _write(args.out, serialize_result(emb, report))
    if args.svg:
        _write(args.svg, render_svg(emb, labels=inst.labels))
    if not report.ok:
        print("certificate FAILED:", report.to_json(), file=sys.stderr)
        return 2
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    emb, _stored = parse_result(_read(args.infile), [list(l.edges) for l in inst.layers])
    bounds = _parse_bounds(args.bounds)
    report = certify_mod.certify_embedding(emb, inst, bounds=bounds)
    _write(args.out, json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    if not report.ok:
        print("certificate FAILED:", report.to_json(), file=sys.stderr)
        return 2
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    emb, _stored = parse_result(_read(args.infile), [list(l.edges) for l in inst.layers])
    _write(args.svg, render_svg(emb, labels=inst.labels))
    return 0


_GEN_RECIPES = {
    "two-paths": ("given", ["path", "path"]),
    "two-caterpillars": ("given", ["caterpillar", "caterpillar"]),
    "path-caterpillar": ("given", ["path", "caterpillar"]),
    "outerplanars": ("free", None),
    "planar-outerplanar": ("free", ["plane-triangulation", "maximal-outerplanar"]),
}


def _cmd_gen(args: argparse.Namespace) -> int:
    seed = _default_seed(args)
    if args.kind not in _GEN_RECIPES:
        raise SimembedError(
            f"unknown kind {args.kind!r}; choose from {sorted(_GEN_RECIPES)}"
        )
    mapping, recipe = _GEN_RECIPES[args.kind]
    if recipe is None:
        recipe = ["maximal-outerplanar"] * args.layers
    layers: list[Layer] = []
    for i, k in enumerate(recipe):
        layers.append(generate(k, args.n, seed + i))
    inst = LayeredInstance(n=args.n, layers=layers, mapping=mapping)
    _write(args.out, serialize_instance(inst))
    return 0


def _cmd_fivepaths(args: argparse.Namespace) -> int:
    digits = args.paths.split(",") if args.paths else list(FIVE_PATHS)
    paths = [path_from_digits(d.strip()) for d in digits]
    report: dict = {"paths": [d.strip() for d in digits], "grid": args.grid}
    if len(paths) == 5:
        cov = five_path_pair_coverage(paths)
        report["coverage"] = {
            "all_covered": cov.all_covered,
            "pairs": {
                PairCoverage.label(pair): covered
                for pair, covered in zip(cov.pairs, cov.covered_by)
            },
            "per_path": cov.per_path_counts(len(paths)),
        }
    result = exhaustive_five_point_check(
        args.grid, paths, seed=_default_seed(args), samples=args.samples
    )
    report["search"] = {
        "exhaustive": result.exhaustive,
        "placements_checked": result.placements_checked,
        "counterexample": None
        if result.counterexample is None
        else [[p.x, p.y] for p in result.counterexample],
    }
    verdict = (
        "no counterexample: some path must cross"
        if result.counterexample is None
        else "counterexample found: all paths embed"
    )
    report["verdict"] = verdict
    _write(args.out, json.dumps(report, indent=2, sort_keys=True) + "\n")
    print(verdict, file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simembed",
        description="Simultaneous grid embeddings of layered graphs, certified exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_embed = sub.add_parser("embed", help="embed an instance document")
    p_embed.add_argument("--in", dest="infile", default="-")
    p_embed.add_argument("--out", default="-")
    p_embed.add_argument("--svg", default=None)
    p_embed.add_argument("--bounds", default=None, help="WxH grid bound to certify")
    p_embed.set_defaults(func=_cmd_embed)

    p_cert = sub.add_parser("certify", help="re-check a result document")
    p_cert.add_argument("--in", dest="infile", default="-")
    p_cert.add_argument("--instance", required=True)
    p_cert.add_argument("--out", default="-")
    p_cert.add_argument("--bounds", default=None)
    p_cert.set_defaults(func=_cmd_certify)

    p_render = sub.add_parser("render", help="render a result document as SVG")
    p_render.add_argument("--in", dest="infile", default="-")
    p_render.add_argument("--instance", required=True)
    p_render.add_argument("--svg", default="-")
    p_render.set_defaults(func=_cmd_render)

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("--kind", required=True, help=", ".join(sorted(_GEN_RECIPES)))
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--layers", type=int, default=3, help="layer count for outerplanars")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--out", default="-")
    p_gen.set_defaults(func=_cmd_gen)

    p_five = sub.add_parser("fivepaths", help="pair coverage and placement search")
    p_five.add_argument("--grid", type=int, default=5)
    p_five.add_argument("--paths", default=None, help="comma-separated digit strings")
    p_five.add_argument("--samples", type=int, default=None)
    p_five.add_argument("--seed", type=int, default=None)
    p_five.add_argument("--out", default="-")
    p_five.set_defaults(func=_cmd_fivepaths)
    return parser


def cli_main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SimembedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(cli_main())
