"""JSON and DOT serialization for instances and labeled orientations.

Instance documents look like {"p": 6, "k": 3, "legs": [2, 2, 5]}. Result
documents carry the instance, one {edge, direction, label} record per edge in
canonical order, and the vertex sums. Serialization is deterministic, so equal
inputs produce byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import FormatError, IncompleteLabelingError, InvalidSpecError
from .model import (
    BACKWARD,
    FORWARD,
    CaterpillarSpec,
    EdgeRef,
    LabeledOrientation,
    VertexRef,
    all_vertex_sums,
)

_DIRECTION_NAMES = {FORWARD: "forward", BACKWARD: "backward"}
_DIRECTION_FLAGS = {name: flag for flag, name in _DIRECTION_NAMES.items()}


def spec_to_obj(spec: CaterpillarSpec) -> dict[str, Any]:
    return {"p": spec.p, "k": spec.k, "legs": list(spec.attachments)}


def spec_from_obj(obj: Any) -> CaterpillarSpec:
    if not isinstance(obj, dict):
        raise FormatError(f"instance must be a JSON object, got {type(obj).__name__}")
    for field in ("p", "k", "legs"):
        if field not in obj:
            raise InvalidSpecError(field, f"missing field '{field}'")
    p, k, legs = obj["p"], obj["k"], obj["legs"]
    if not isinstance(legs, list):
        raise InvalidSpecError("legs", "field 'legs' must be a list of integers")
    return CaterpillarSpec(p, k, tuple(legs))


def parse_instance(text: str) -> CaterpillarSpec:
    """Parse an instance document; malformed input raises with the offending field."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return spec_from_obj(obj)


def instance_to_json(spec: CaterpillarSpec) -> str:
    return json.dumps(spec_to_obj(spec), indent=2) + "\n"


def _edge_to_obj(edge: EdgeRef) -> dict[str, Any]:
    if edge.leg == 0:
        return {"type": "spine", "index": edge.index}
    return {"type": "leg", "leg": edge.leg, "index": edge.index}


def _edge_from_obj(obj: Any) -> EdgeRef:
    if not isinstance(obj, dict) or "type" not in obj or "index" not in obj:
        raise FormatError(f"bad edge record {obj!r}")
    if obj["type"] == "spine":
        return EdgeRef.spine(obj["index"])
    if obj["type"] == "leg":
        if "leg" not in obj:
            raise FormatError(f"leg edge record missing 'leg': {obj!r}")
        return EdgeRef.on_leg(obj["leg"], obj["index"])
    raise FormatError(f"unknown edge type {obj['type']!r}")


def _vertex_to_obj(v: VertexRef) -> dict[str, Any]:
    if v.leg == 0:
        return {"type": "spine", "index": v.pos}
    return {"type": "leg", "leg": v.leg, "index": v.pos}


def export_json(spec: CaterpillarSpec, lo: LabeledOrientation) -> str:
    """Serialize a complete labeled orientation, including per-vertex sums."""
    sums = all_vertex_sums(spec, lo)
    doc = {
        "spec": spec_to_obj(spec),
        "edges": [
            {
                "edge": _edge_to_obj(edge),
                "direction": _DIRECTION_NAMES[lo.directions[i]],
                "label": lo.labels[i],
            }
            for i, edge in enumerate(spec.edges())
        ],
        "sums": [{"vertex": _vertex_to_obj(v), "sum": sums[v]} for v in spec.vertices()],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_result(text: str) -> tuple[CaterpillarSpec, LabeledOrientation]:
    """Parse a result document back into (spec, orientation). Inverse of export_json."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "spec" not in doc or "edges" not in doc:
        raise FormatError("result document must contain 'spec' and 'edges'")
    spec = spec_from_obj(doc["spec"])
    records = doc["edges"]
    if not isinstance(records, list):
        raise FormatError("'edges' must be a list")
    directions: list[int | None] = [None] * spec.m
    labels: list[int | None] = [None] * spec.m
    for rec in records:
        if not isinstance(rec, dict) or not {"edge", "direction", "label"} <= rec.keys():
            raise FormatError(f"bad edge record {rec!r}")
        edge = _edge_from_obj(rec["edge"])
        try:
            idx = spec.edge_index(edge)
        except KeyError:
            raise FormatError(f"edge {edge} does not exist in this instance") from None
        if directions[idx] is not None:
            raise FormatError(f"duplicate record for edge {edge}")
        if rec["direction"] not in _DIRECTION_FLAGS:
            raise FormatError(f"unknown direction {rec['direction']!r} on edge {edge}")
        label = rec["label"]
        if not isinstance(label, int) or isinstance(label, bool):
            raise FormatError(f"label on edge {edge} must be an integer, got {label!r}")
        directions[idx] = _DIRECTION_FLAGS[rec["direction"]]
        labels[idx] = label
    for idx, d in enumerate(directions):
        if d is None:
            raise FormatError(f"missing record for edge {spec.edges()[idx]}")
    return spec, LabeledOrientation(tuple(directions), tuple(labels))  # type: ignore[arg-type]


def export_dot(spec: CaterpillarSpec, lo: LabeledOrientation) -> str:
    """Emit a Graphviz digraph with one labeled arc per edge, in canonical order."""
    lines = ["digraph caterpillar {"]
    for i, edge in enumerate(spec.edges()):
        label = lo.labels[i]
        if label is None:
            raise IncompleteLabelingError(f"edge {edge} is unlabeled")
        low, high = spec.endpoints(edge)
        tail, head = (low, high) if lo.directions[i] == FORWARD else (high, low)
        lines.append(f'  "{tail}" -> "{head}" [label={label}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
