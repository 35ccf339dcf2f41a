"""Canonical JSON files for covers and cross families.

``emit_*`` writes one fixed layout (two-space indent, one biclique or pair
per line, sorted id arrays, trailing newline) so that ``emit(parse(text))``
reproduces any canonical file byte for byte.
"""

from __future__ import annotations

import json

from .core import Biclique, BicliqueError, Cover, CrossFamily, HostGraph, SignaturePair

COVER_FORMAT = "biclique-cover/v1"
FAMILY_FORMAT = "cross-family/v1"


class FormatError(BicliqueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _ids(values) -> str:
    return json.dumps(sorted(values))


def emit_cover(cover: Cover) -> str:
    size_key = "n" if cover.host.kind == "complete" else "m"
    lines = [
        "{",
        f'  "format": "{COVER_FORMAT}",',
        f'  "graph": {{"kind": "{cover.host.kind}", "{size_key}": {cover.host.size}}},',
        '  "bicliques": [',
    ]
    body = [f'    {{"left": {_ids(b.left)}, "right": {_ids(b.right)}}}' for b in cover.bicliques]
    lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def emit_family(family: CrossFamily) -> str:
    lines = ["{", f'  "format": "{FAMILY_FORMAT}",', f'  "ground": {family.ground},']
    if not family.pairs:
        lines.append('  "pairs": []')
    else:
        lines.append('  "pairs": [')
        lines.append(",\n".join(f'    {{"a": {_ids(p.a)}, "b": {_ids(p.b)}}}' for p in family.pairs))
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _load(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("$", f"malformed JSON ({exc.msg} at line {exc.lineno} column {exc.colno})") from None
    if not isinstance(data, dict):
        raise FormatError("$", "top level must be an object")
    return data


def _int(value, path: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(path, f"expected an integer, got {json.dumps(value)}")
    if minimum is not None and value < minimum:
        raise FormatError(path, f"must be >= {minimum}, got {value}")
    return value


def _id_array(value, path: str, lo: int, hi: int) -> frozenset[int]:
    if not isinstance(value, list):
        raise FormatError(path, "expected an array")
    out = []
    for t, v in enumerate(value):
        v = _int(v, f"{path}[{t}]")
        if not (lo <= v <= hi):
            raise FormatError(f"{path}[{t}]", f"{v} outside {lo}..{hi}")
        if out and v <= out[-1]:
            raise FormatError(f"{path}[{t}]", "array must be sorted ascending without duplicates")
        out.append(v)
    return frozenset(out)


def _field(data: dict, key: str, path: str):
    if key not in data:
        raise FormatError(path, f"missing field {key!r}")
    return data[key]


def _check_format(data: dict, expected: str):
    tag = _field(data, "format", "$")
    if tag != expected:
        raise FormatError("$.format", f"unknown format tag {json.dumps(tag)}, expected {expected!r}")


def parse_cover(text: str) -> Cover:
    data = _load(text)
    _check_format(data, COVER_FORMAT)
    graph = _field(data, "graph", "$")
    if not isinstance(graph, dict):
        raise FormatError("$.graph", "expected an object")
    kind = _field(graph, "kind", "$.graph")
    if kind == "complete":
        size = _int(_field(graph, "n", "$.graph"), "$.graph.n", 1)
    elif kind == "crown":
        size = _int(_field(graph, "m", "$.graph"), "$.graph.m", 1)
    else:
        raise FormatError("$.graph.kind", f"unknown host kind {json.dumps(kind)}")
    raw = _field(data, "bicliques", "$")
    if not isinstance(raw, list) or not raw:
        raise FormatError("$.bicliques", "expected a nonempty array")
    bicliques = []
    for t, b in enumerate(raw):
        path = f"$.bicliques[{t}]"
        if not isinstance(b, dict):
            raise FormatError(path, "expected an object")
        left = _id_array(_field(b, "left", path), f"{path}.left", 0, size - 1)
        right = _id_array(_field(b, "right", path), f"{path}.right", 0, size - 1)
        if left & right:
            raise FormatError(path, f"biclique {t + 1}: left and right share ids {sorted(left & right)}")
        bicliques.append(Biclique(left, right))
    return Cover(HostGraph(kind, size), tuple(bicliques))


def parse_family(text: str) -> CrossFamily:
    data = _load(text)
    _check_format(data, FAMILY_FORMAT)
    ground = _int(_field(data, "ground", "$"), "$.ground", 1)
    raw = _field(data, "pairs", "$")
    if not isinstance(raw, list):
        raise FormatError("$.pairs", "expected an array")
    pairs = []
    for t, p in enumerate(raw):
        path = f"$.pairs[{t}]"
        if not isinstance(p, dict):
            raise FormatError(path, "expected an object")
        a = _id_array(_field(p, "a", path), f"{path}.a", 1, ground)
        b = _id_array(_field(p, "b", path), f"{path}.b", 1, ground)
        if a & b:
            raise FormatError(path, f"pair {t}: a and b share elements {sorted(a & b)}")
        pairs.append(SignaturePair(a, b))
    return CrossFamily(ground, tuple(pairs))
