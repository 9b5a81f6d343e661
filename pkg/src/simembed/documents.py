"""JSON serialization of instances, results, and certificates.

Documents are strict: unknown fields are rejected so that typos in
fixtures fail loudly instead of being ignored.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .certify import CertificateReport
from .errors import InvalidInstanceError, ParseError
from .geometry import GridPoint
from .graphs import LAYER_CLASSES, Layer, LayeredInstance, validate_instance
from .mapped import SimultaneousEmbedding

_INSTANCE_KEYS = {"n", "mapping", "layers"}
_LAYER_KEYS = {"class", "edges", "rotation", "outer_cycle"}
_RESULT_KEYS = {"coords", "width", "height", "assignments", "certificate"}


def _require_keys(obj: dict, allowed: set[str], what: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ParseError(f"unknown {what} fields: {sorted(unknown)}")


def _int_pairs(value: Any, what: str) -> list[tuple[int, int]]:
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a list of pairs")
    out = []
    for item in value:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) for x in item)
        ):
            raise ParseError(f"{what} entries must be integer pairs")
        out.append((item[0], item[1]))
    return out


def parse_instance(text: str | bytes) -> LayeredInstance:
    """Parse and validate an instance document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("instance document must be a JSON object")
    _require_keys(data, _INSTANCE_KEYS, "instance")
    for key in ("n", "mapping", "layers"):
        if key not in data:
            raise ParseError(f"instance document missing {key!r}")
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("n must be a positive integer")
    mapping = data["mapping"]
    if mapping not in ("given", "free"):
        raise ParseError("mapping must be 'given' or 'free'")
    if not isinstance(data["layers"], list) or not data["layers"]:
        raise ParseError("layers must be a non-empty list")
    layers = []
    for li, raw in enumerate(data["layers"]):
        if not isinstance(raw, dict):
            raise ParseError(f"layer {li} must be an object")
        _require_keys(raw, _LAYER_KEYS, f"layer {li}")
        if "class" not in raw or raw["class"] not in LAYER_CLASSES:
            raise ParseError(
                f"layer {li} needs a class among {sorted(LAYER_CLASSES)}"
            )
        edges = _int_pairs(raw.get("edges", []), f"layer {li} edges")
        rotation = None
        if "rotation" in raw and raw["rotation"] is not None:
            rotation = raw["rotation"]
            if not isinstance(rotation, list) or not all(
                isinstance(r, list) and all(isinstance(x, int) for x in r)
                for r in rotation
            ):
                raise ParseError(f"layer {li} rotation must be integer lists")
        outer_cycle = None
        if "outer_cycle" in raw and raw["outer_cycle"] is not None:
            outer_cycle = raw["outer_cycle"]
            if not isinstance(outer_cycle, list) or not all(
                isinstance(x, int) for x in outer_cycle
            ):
                raise ParseError(f"layer {li} outer_cycle must be integers")
        layers.append(
            Layer(kind=raw["class"], edges=edges, rotation=rotation, outer_cycle=outer_cycle)
        )
    inst = LayeredInstance(n=n, layers=layers, mapping=mapping)
    try:
        validate_instance(inst)
    except InvalidInstanceError as exc:
        raise ParseError(str(exc)) from exc
    return inst


def instance_to_json(inst: LayeredInstance) -> dict:
    layers = []
    for layer in inst.layers:
        raw: dict[str, Any] = {"class": layer.kind, "edges": [list(e) for e in layer.edges]}
        if layer.rotation is not None:
            raw["rotation"] = [list(r) for r in layer.rotation]
        if layer.outer_cycle is not None:
            raw["outer_cycle"] = list(layer.outer_cycle)
        layers.append(raw)
    return {"n": inst.n, "mapping": inst.mapping, "layers": layers}


def serialize_instance(inst: LayeredInstance) -> str:
    return json.dumps(instance_to_json(inst), indent=2, sort_keys=True) + "\n"


def result_to_json(
    emb: SimultaneousEmbedding, certificate: Optional[CertificateReport] = None
) -> dict:
    doc: dict[str, Any] = {
        "coords": [[p.x, p.y] for p in emb.coords],
        "width": emb.width,
        "height": emb.height,
        "assignments": emb.assignments,
    }
    if certificate is not None:
        doc["certificate"] = certificate.to_json()
    return doc


def serialize_result(
    emb: SimultaneousEmbedding, certificate: Optional[CertificateReport] = None
) -> str:
    return json.dumps(result_to_json(emb, certificate), indent=2, sort_keys=True) + "\n"


def parse_result(
    text: str | bytes, layers: list[list[tuple[int, int]]]
) -> tuple[SimultaneousEmbedding, Optional[CertificateReport]]:
    """Rebuild an embedding from a result document plus its instance's layers."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("result document must be a JSON object")
    _require_keys(data, _RESULT_KEYS, "result")
    for key in ("coords", "width", "height"):
        if key not in data:
            raise ParseError(f"result document missing {key!r}")
    coords = [GridPoint(x, y) for x, y in _int_pairs(data["coords"], "coords")]
    assignments = data.get("assignments")
    if assignments is not None and not (
        isinstance(assignments, list)
        and all(isinstance(a, list) and all(isinstance(x, int) for x in a) for a in assignments)
    ):
        raise ParseError("assignments must be lists of integers")
    emb = SimultaneousEmbedding(
        coords=coords,
        layers=layers,
        width=data["width"],
        height=data["height"],
        assignments=assignments,
    )
    cert = None
    if "certificate" in data and data["certificate"] is not None:
        cert = CertificateReport.from_json(data["certificate"])
    return emb, cert
