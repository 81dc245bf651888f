"""Batch command-line frontend.

Exit codes: 0 when the queried property holds (or the command succeeded),
1 when the property fails, 2 on malformed input, unusable arguments, or a
resource bound.  Documents are UTF-8 JSON on stdout; rewrite traces go to
stderr.  The environment variable MBQC_MAX_QUBITS overrides the simulator
size bound.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .angles import Angle
from .documents import (
    angle_from_json,
    certificate_from_json,
    certificate_to_json,
    dump_json,
    load_json,
    open_graph_from_json,
    pattern_from_json,
    pattern_to_json,
)
from .errors import (
    CertificateIncompleteError,
    DocumentError,
    MbqcError,
    ResourceLimitError,
)
from .flows import (
    certificate_violation,
    find_extended_pauli_flow,
    find_pauli_flow,
    induced_pattern,
)
from .patterns import validate
from .rewrite import normalize_pauli_first, normalize_with_trace
from .simulate import is_robustly_deterministic, semantics

_KIND_ALIASES = {"epf": "extended", "extended": "extended", "pauli": "pauli", "gflow": "gflow"}


def _fail(message: str, code: int = 2) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def cmd_check_flow(args: argparse.Namespace) -> int:
    graph = open_graph_from_json(load_json(args.graph))
    cert = certificate_from_json(load_json(args.certificate), graph)
    if args.kind is not None:
        wanted = _KIND_ALIASES.get(args.kind)
        if wanted is None:
            return _fail(f"unknown flow kind {args.kind!r}")
        if wanted != cert.kind:
            return _fail(f"certificate kind is {cert.kind!r}, not {wanted!r}")
    try:
        violation = certificate_violation(graph, cert)
    except CertificateIncompleteError as exc:
        print(f"invalid: {exc}")
        return 1
    if violation is None:
        article = "an" if cert.kind == "extended" else "a"
        print(f"valid: certificate is {article} {cert.kind} flow of the graph")
        return 0
    print(f"invalid: {violation}")
    return 1


def cmd_find_flow(args: argparse.Namespace) -> int:
    graph = open_graph_from_json(load_json(args.graph))
    kind = _KIND_ALIASES.get(args.kind)
    if kind not in ("pauli", "extended"):
        return _fail(f"find-flow supports kinds 'pauli' and 'epf', not {args.kind!r}")
    finder = find_pauli_flow if kind == "pauli" else find_extended_pauli_flow
    if args.max_vertices is not None:
        cert = finder(graph, max_vertices=args.max_vertices)
    else:
        cert = finder(graph)
    if cert is None:
        print("none")
        return 1
    sys.stdout.write(dump_json(certificate_to_json(cert)))
    return 0


def cmd_check_determinism(args: argparse.Namespace) -> int:
    pat = pattern_from_json(load_json(args.pattern))
    problems = validate(pat)
    if problems:
        return _fail("invalid pattern: " + "; ".join(problems))
    if any(s.angle.is_symbolic for s in pat.steps):
        return _fail("pattern has unbound angle variables")
    report = is_robustly_deterministic(pat, tol=args.tol)
    print(f"robustly-deterministic: {'yes' if report.ok else 'no'}")
    for step in report.steps:
        eps = ", ".join(f"{e:.6g}" for e in step.epsilons)
        norms = ", ".join(f"{x:.6g}" for x in step.branch_norms)
        print(
            f"step {step.index}: qubit {step.qubit} label {step.label.value} "
            f"eps [{eps}] choi-distance {step.choi_distance:.3e} "
            f"branch-norms [{norms}] {'ok' if step.ok else 'VIOLATED'}"
        )
    if not report.ok and report.failing_step is not None:
        print(f"first failing step: {report.failing_step.index} (qubit {report.failing_step.qubit})")
    return 0 if report.ok else 1


def cmd_push_pauli(args: argparse.Namespace) -> int:
    pat = pattern_from_json(load_json(args.pattern))
    problems = validate(pat)
    if problems:
        return _fail("invalid pattern: " + "; ".join(problems))
    if args.strategy == "first":
        if args.emit_trace:
            out, trace = normalize_with_trace(pat)
            for line in trace.lines():
                print(line, file=sys.stderr)
        else:
            out = normalize_pauli_first(pat, "first")
        sys.stdout.write(dump_json(pattern_to_json(out)))
        return 0
    forms = normalize_pauli_first(pat, "all")
    docs = [pattern_to_json(p) for p in sorted(forms, key=repr)]
    sys.stdout.write(dump_json({"kind": "pattern-set", "patterns": docs}))
    return 0


def cmd_semantics(args: argparse.Namespace) -> int:
    pat = pattern_from_json(load_json(args.pattern))
    problems = validate(pat)
    if problems:
        return _fail("invalid pattern: " + "; ".join(problems))
    if any(s.angle.is_symbolic for s in pat.steps):
        return _fail("pattern has unbound angle variables")
    sup = semantics(pat)
    choi = [
        [[_sig12(z.real), _sig12(z.imag)] for z in row]
        for row in sup.choi
    ]
    doc = {
        "kind": "superoperator",
        "in_qubits": list(sup.in_qubits),
        "out_qubits": list(sup.out_qubits),
        "choi": choi,
    }
    sys.stdout.write(dump_json(doc))
    return 0


def _parse_angles(raw: str | None, graph) -> dict[int, Angle]:
    angles: dict[int, Angle] = {}
    payload: dict[str, Any] = {}
    if raw:
        if raw.startswith("@"):
            payload = load_json(raw[1:])
        else:
            try:
                payload = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise DocumentError(f"bad angles JSON: {exc}") from None
        if not isinstance(payload, dict):
            raise DocumentError("angles must be a JSON object")
    for key, value in payload.items():
        angles[int(key)] = angle_from_json(value)
    for v in graph.measured_vertices():
        if v not in angles:
            angles[v] = Angle.of_pi("1/4") if graph.label(v).is_plane else Angle.ZERO
    return angles


def cmd_induce(args: argparse.Namespace) -> int:
    graph = open_graph_from_json(load_json(args.graph))
    cert = certificate_from_json(load_json(args.certificate), graph)
    angles = _parse_angles(args.angles, graph)
    if args.total_order:
        total = [int(x) for x in args.total_order.split(",") if x.strip()]
    else:
        total = cert.order.canonical_extension()
    pat = induced_pattern(graph, cert.p_map(), cert.order, total, angles)
    sys.stdout.write(dump_json(pattern_to_json(pat)))
    return 0


def cmd_corpus_verify(args: argparse.Namespace) -> int:
    from .acceptance import run_all

    numbers = None
    if args.criteria:
        numbers = [int(x) for x in args.criteria.split(",") if x.strip()]
    results = run_all(numbers)
    for result in results:
        print(result.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mbqc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-flow", help="validate a flow certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--kind", choices=["gflow", "pauli", "epf"], default=None)
    p.set_defaults(fn=cmd_check_flow)

    p = sub.add_parser("find-flow", help="search for a flow certificate")
    p.add_argument("graph")
    p.add_argument("--kind", choices=["pauli", "epf"], required=True)
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(fn=cmd_find_flow)

    p = sub.add_parser("check-determinism", help="robust-determinism oracle")
    p.add_argument("pattern")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(fn=cmd_check_determinism)

    p = sub.add_parser("push-pauli", help="normalize to a Pauli-first pattern")
    p.add_argument("pattern")
    p.add_argument("--strategy", choices=["first", "all"], default="first")
    p.add_argument("--emit-trace", action="store_true")
    p.set_defaults(fn=cmd_push_pauli)

    p = sub.add_parser("semantics", help="dump the Choi matrix of a pattern")
    p.add_argument("pattern")
    p.set_defaults(fn=cmd_semantics)

    p = sub.add_parser("induce", help="build the pattern induced by a certificate")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--angles", default=None, help="JSON object or @file; vertex -> angle")
    p.add_argument("--total-order", default=None, help="comma-separated measurement order")
    p.set_defaults(fn=cmd_induce)

    p = sub.add_parser("corpus-verify", help="run the acceptance criteria")
    p.add_argument("--criteria", default=None, help="comma-separated criterion numbers")
    p.set_defaults(fn=cmd_corpus_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DocumentError as exc:
        return _fail(str(exc))
    except ResourceLimitError as exc:
        return _fail(str(exc))
    except MbqcError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
