"""JSON document formats for open graphs, patterns, and certificates.

Open graph::

    {"kind": "open-graph", "vertices": [0, 1], "edges": [[0, 1]],
     "inputs": [0], "outputs": [1], "labels": {"0": "XY"}}

A pattern document carries the same graph fields plus ``steps`` in execution
order; its ``outputs`` must equal the unmeasured vertices.  Angles are
``{"pi_mult": "1/4"}`` (exact), ``{"real": 0.25}``, or ``{"var": "theta"}``
for a free symbolic angle.  A certificate document's ``kind`` is the flow
kind (``epf``, ``pauli``, or ``gflow``)::

    {"kind": "epf", "p": {"0": [0, 4]}, "order": [[0, 1]], "D": {"1": [2]}}

Certificates do not embed their graph; parsing one requires the open graph
it refers to.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .angles import Angle
from .bits import bit_list, mask_of
from .errors import DocumentError
from .flows import FlowCertificate, StrictPartialOrder
from .graphs import Graph, Label, OpenGraph
from .patterns import MeasurementStep, Pattern

_FLOW_KINDS = {"epf": "extended", "pauli": "pauli", "gflow": "gflow"}
_FLOW_NAMES = {v: k for k, v in _FLOW_KINDS.items()}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentError(message)


def _vertex_list(payload: Any, what: str) -> list[int]:
    _require(isinstance(payload, list), f"{what} must be a list")
    out = []
    for v in payload:
        _require(isinstance(v, int) and v >= 0, f"{what} must hold non-negative integers")
        out.append(v)
    return out


def _label_from_text(text: Any, what: str) -> Label:
    _require(isinstance(text, str), f"{what} must be a string")
    try:
        return Label("".join(sorted(text, key="XYZ".index)))
    except (ValueError, KeyError):
        raise DocumentError(f"{what}: bad label {text!r}") from None


def angle_to_json(angle: Angle) -> dict[str, Any]:
    if angle.pi_mult is not None:
        return {"pi_mult": str(angle.pi_mult)}
    if angle.real is not None:
        return {"real": angle.real}
    return {"var": angle.var}


def angle_from_json(payload: Any) -> Angle:
    _require(isinstance(payload, dict) and len(payload) == 1, "angle must be a one-key object")
    key, value = next(iter(payload.items()))
    if key == "pi_mult":
        try:
            return Angle.of_pi(Fraction(value))
        except (ValueError, ZeroDivisionError, TypeError):
            raise DocumentError(f"bad pi_mult {value!r}") from None
    if key == "real":
        _require(isinstance(value, (int, float)), "real angle must be a number")
        return Angle.of_real(float(value))
    if key == "var":
        _require(isinstance(value, str) and bool(value), "angle variable must be a name")
        return Angle.variable(value)
    raise DocumentError(f"unknown angle form {key!r}")


def open_graph_to_json(g: OpenGraph) -> dict[str, Any]:
    return {
        "kind": "open-graph",
        "vertices": list(g.graph.vertices),
        "edges": [list(e) for e in g.graph.edges],
        "inputs": bit_list(g.inputs),
        "outputs": bit_list(g.outputs),
        "labels": {str(v): lab.value for v, lab in sorted(g.label_of.items())},
    }


def _graph_fields(payload: dict[str, Any]) -> tuple[Graph, list[int], list[int]]:
    vertices = _vertex_list(payload.get("vertices"), "vertices")
    _require(len(set(vertices)) == len(vertices), "duplicate vertices")
    edges_raw = payload.get("edges")
    _require(isinstance(edges_raw, list), "edges must be a list")
    edges = []
    for e in edges_raw:
        _require(isinstance(e, list) and len(e) == 2, "each edge must be a pair")
        edges.append((int(e[0]), int(e[1])))
    inputs = _vertex_list(payload.get("inputs", []), "inputs")
    outputs = _vertex_list(payload.get("outputs", []), "outputs")
    try:
        graph = Graph.make(vertices, edges)
    except Exception as exc:
        raise DocumentError(f"bad graph: {exc}") from None
    return graph, inputs, outputs


def open_graph_from_json(payload: dict[str, Any]) -> OpenGraph:
    _require(payload.get("kind") == "open-graph", "expected an open-graph document")
    graph, inputs, outputs = _graph_fields(payload)
    labels_raw = payload.get("labels", {})
    _require(isinstance(labels_raw, dict), "labels must be an object")
    labels = {}
    for key, text in labels_raw.items():
        try:
            v = int(key)
        except ValueError:
            raise DocumentError(f"bad label key {key!r}") from None
        labels[v] = _label_from_text(text, f"label of {key}")
    try:
        return OpenGraph.make(graph, inputs, outputs, labels)
    except Exception as exc:
        raise DocumentError(f"bad open graph: {exc}") from None


def pattern_to_json(pat: Pattern) -> dict[str, Any]:
    return {
        "kind": "pattern",
        "vertices": list(pat.graph.vertices),
        "edges": [list(e) for e in pat.graph.edges],
        "inputs": bit_list(pat.inputs),
        "outputs": bit_list(pat.outputs),
        "steps": [
            {
                "qubit": s.qubit,
                "label": s.label.value,
                "angle": angle_to_json(s.angle),
                "x_corr": bit_list(s.x_corr),
                "z_corr": bit_list(s.z_corr),
            }
            for s in pat.steps
        ],
    }


def pattern_from_json(payload: dict[str, Any]) -> Pattern:
    _require(payload.get("kind") == "pattern", "expected a pattern document")
    graph, inputs, outputs = _graph_fields(payload)
    steps_raw = payload.get("steps")
    _require(isinstance(steps_raw, list), "steps must be a list")
    steps = []
    for i, raw in enumerate(steps_raw):
        _require(isinstance(raw, dict), f"step {i} must be an object")
        _require(isinstance(raw.get("qubit"), int), f"step {i} needs a qubit")
        label = _label_from_text(raw.get("label"), f"step {i} label")
        angle = angle_from_json(raw.get("angle"))
        x_corr = mask_of(_vertex_list(raw.get("x_corr", []), f"step {i} x_corr"))
        z_corr = mask_of(_vertex_list(raw.get("z_corr", []), f"step {i} z_corr"))
        steps.append(MeasurementStep(raw["qubit"], label, angle, x_corr, z_corr))
    pat = Pattern.make(graph, inputs, steps)
    _require(
        pat.outputs == mask_of(outputs),
        "outputs field does not match the unmeasured vertices",
    )
    return pat


def certificate_to_json(cert: FlowCertificate) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "kind": _FLOW_NAMES[cert.kind],
        "p": {str(u): bit_list(d) for u, d in cert.p},
        "order": [list(pair) for pair in cert.order.pairs],
    }
    if cert.kind == "extended":
        doc["D"] = {str(v): bit_list(d) for v, d in cert.compensations}
    return doc


def certificate_from_json(payload: dict[str, Any], graph: OpenGraph) -> FlowCertificate:
    kind_name = payload.get("kind")
    _require(kind_name in _FLOW_KINDS, f"unknown certificate kind {kind_name!r}")
    kind = _FLOW_KINDS[kind_name]
    p_raw = payload.get("p")
    _require(isinstance(p_raw, dict), "p must be an object")
    p = {}
    for key, targets in p_raw.items():
        try:
            u = int(key)
        except ValueError:
            raise DocumentError(f"bad p key {key!r}") from None
        p[u] = mask_of(_vertex_list(targets, f"p({key})"))
    order_raw = payload.get("order", [])
    _require(isinstance(order_raw, list), "order must be a list of pairs")
    pairs = []
    for pair in order_raw:
        _require(isinstance(pair, list) and len(pair) == 2, "order entries must be pairs")
        pairs.append((int(pair[0]), int(pair[1])))
    try:
        order = StrictPartialOrder.make(graph.measured, pairs)
    except Exception as exc:
        raise DocumentError(f"bad order: {exc}") from None
    comp = {}
    if "D" in payload:
        d_raw = payload["D"]
        _require(isinstance(d_raw, dict), "D must be an object")
        for key, targets in d_raw.items():
            try:
                v = int(key)
            except ValueError:
                raise DocumentError(f"bad D key {key!r}") from None
            comp[v] = mask_of(_vertex_list(targets, f"D({key})"))
    return FlowCertificate.make(kind, graph, p, order, comp)


def load_json(path: str) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from None
    _require(isinstance(payload, dict), f"{path}: document must be a JSON object")
    return payload


def dump_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
