"""Command-line front end.

Exit codes: 0 = yes/found/satisfied, 1 = no/not found/not satisfied,
2 = any error (parse failure, disconnected input, exhausted budget,
oracle disagreement).  ``--json`` switches to a machine-readable
certificate document with a versioned schema key.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decide import (
    DecisionCertificate,
    build_antiparallel_d_stable,
    condition_table,
    decide_existence,
    graph_deficiency_report,
)
from .errors import TraceForgeError
from .formats import EDGELIST, GRAPH6, load_graph, load_trace_sequence
from .search import TraceSpec, find_trace, spec_satisfied
from .walks import (
    classify_trace,
    format_trace_text,
    repetition_analysis,
    validate_double_trace,
)

SCHEMA = "trace-forge/1"
EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

#: CLI fallback node budget for hosts above the unbudgeted edge limit.
DEFAULT_BUDGET = 5_000_000


def _json_dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _certificate_doc(cert: DecisionCertificate) -> dict:
    doc: dict = {
        "verdict": "yes" if cert.verdict else "no",
        "kind": cert.kind,
        "direction": cert.direction,
    }
    if cert.d is not None:
        doc["d"] = cert.d
    if cert.witness_trace is not None:
        doc["evidence"] = {
            "type": "trace",
            "sequence": list(cert.witness_trace.sequence),
        }
    elif cert.witness_tree is not None:
        doc["evidence"] = {
            "type": "tree",
            "edges": [list(e) for e in cert.witness_tree.sorted_edges()],
        }
    elif cert.violated_condition is not None:
        doc["evidence"] = {
            "type": "condition",
            "name": cert.violated_condition,
            "label": cert.condition_label(),
            "detail": cert.condition_detail,
        }
    return doc


def _budget_for(g) -> int | None:
    env = os.environ.get("TRACE_FORGE_BUDGET")
    if env is not None:
        return int(env)
    if g.num_edges > 12:
        return DEFAULT_BUDGET
    return None


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.json:
        doc["schema"] = SCHEMA
        print(_json_dump(doc))
    else:
        for line in text_lines:
            print(line)


def cmd_decide(args) -> int:
    g = load_graph(args.input, args.format)
    budget = _budget_for(g)
    cert = decide_existence(
        g, args.kind, args.direction, args.d, witness=True, budget=budget
    )
    if args.oracle:
        spec = TraceSpec(args.kind, args.direction, args.d)
        oracle_trace = find_trace(g, spec, budget)
        if (oracle_trace is not None) != cert.verdict:
            print(
                f"oracle disagreement: predicate={cert.verdict} "
                f"search={'found' if oracle_trace else 'exhausted'}",
                file=sys.stderr,
            )
            return EXIT_ERROR
    doc = _certificate_doc(cert)
    doc["command"] = "decide"
    if cert.verdict:
        lines = ["verdict: yes"]
        if cert.witness_trace is not None:
            lines.append("witness trace: " + format_trace_text(cert.witness_trace))
        elif cert.witness_tree is not None:
            lines.append(
                "witness tree: "
                + " ".join(f"{u}-{v}" for u, v in cert.witness_tree.sorted_edges())
            )
    else:
        lines = [f"verdict: no ({cert.condition_label()})"]
    _emit(args, doc, lines)
    return EXIT_YES if cert.verdict else EXIT_NO


def cmd_find(args) -> int:
    g = load_graph(args.input, args.format)
    budget = _budget_for(g)
    spec = TraceSpec(args.kind, args.direction, args.d)
    if args.kind == "stable" and args.direction == "antiparallel":
        trace = build_antiparallel_d_stable(g, args.d, budget=budget)
    else:
        trace = find_trace(g, spec, budget)
    if trace is None:
        _emit(
            args,
            {"command": "find", "verdict": "no"},
            ["not found"],
        )
        return EXIT_NO
    cls = classify_trace(trace)
    meta = {
        "length": trace.length,
        "direction": cls.direction,
        "stability_order": cls.stability_order,
        "strong": cls.strong,
    }
    doc = {
        "command": "find",
        "verdict": "yes",
        "trace": list(trace.sequence),
        "metadata": meta,
    }
    _emit(args, doc, [format_trace_text(trace), json.dumps(meta, sort_keys=True)])
    return EXIT_YES


def cmd_verify(args) -> int:
    g = load_graph(args.input, args.format)
    sequence = load_trace_sequence(args.trace)
    trace = validate_double_trace(g, sequence)
    cls = classify_trace(trace)
    report = repetition_analysis(trace, "components")
    spec = TraceSpec(args.kind, args.direction, args.d)
    ok = spec_satisfied(spec, cls)
    doc = {
        "command": "verify",
        "verdict": "yes" if ok else "no",
        "classification": {
            "direction": cls.direction,
            "stability_order": cls.stability_order,
            "strong": cls.strong,
        },
        "minimal_repetitions": {
            str(v): [sorted(c) for c in comps]
            for v, comps in sorted(report.minimal_repetitions.items())
        },
    }
    lines = [
        f"direction: {cls.direction}",
        f"stability_order: {cls.stability_order}",
        f"strong: {cls.strong}",
    ]
    for v, comps in sorted(report.minimal_repetitions.items()):
        lines.append(f"repetitions at {v}: " + " ".join(str(sorted(c)) for c in comps))
    lines.append(f"satisfies requested cell: {'yes' if ok else 'no'}")
    _emit(args, doc, lines)
    return EXIT_YES if ok else EXIT_NO


def cmd_deficiency(args) -> int:
    g = load_graph(args.input, args.format)
    report = graph_deficiency_report(g, args.d)
    doc = {"command": "deficiency", **report}
    lines = [
        f"betti_number: {report['betti_number']}",
        f"deficiency: {report['deficiency']}",
        f"witness_tree: {report['witness_tree']}",
    ]
    if args.d is not None:
        lines.append(
            f"qualified_deficiency(D={args.d}): "
            + str(report["qualified_deficiency"])
        )
    _emit(args, doc, lines)
    return EXIT_YES


def cmd_table(args) -> int:
    g = load_graph(args.input, args.format)
    budget = _budget_for(g)
    d_values = args.d_list or [1]
    table = condition_table(g, d_values, witness=False, budget=budget)
    if args.oracle:
        if g.num_edges > 12:
            print("oracle cross-check needs at most 12 edges", file=sys.stderr)
            return EXIT_ERROR
        for (kind, direction, d), cert in table.items():
            oracle_trace = find_trace(g, TraceSpec(kind, direction, d), budget)
            if (oracle_trace is not None) != cert.verdict:
                print(
                    f"oracle disagreement at cell ({kind}, {direction}, d={d})",
                    file=sys.stderr,
                )
                return EXIT_ERROR
    cells = []
    lines = []
    for (kind, direction, d), cert in table.items():
        label = "yes" if cert.verdict else cert.condition_label()
        cell_name = kind if d is None else f"{kind}(d={d})"
        cells.append(
            {
                "kind": kind,
                "direction": direction,
                "d": d,
                "verdict": "yes" if cert.verdict else "no",
                "condition": label,
            }
        )
        lines.append(f"{cell_name:>14} | {direction:>12} | {label}")
    _emit(args, doc={"command": "table", "cells": cells}, text_lines=lines)
    return EXIT_YES


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-i", "--input", required=True, help="graph file")
    parser.add_argument(
        "--format",
        choices=[EDGELIST, GRAPH6],
        default=EDGELIST,
        help="input format (default: edgelist)",
    )
    parser.add_argument("--json", action="store_true", help="JSON output")


def _add_cell(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--kind",
        choices=["double", "stable", "strong"],
        default="double",
        help="trace kind (default: double)",
    )
    parser.add_argument(
        "--direction",
        choices=["any", "parallel", "antiparallel"],
        default="any",
        help="direction constraint (default: any)",
    )
    parser.add_argument("-d", type=int, default=None, help="stability order")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trace-forge",
        description="Decide, construct, and verify double traces of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_decide = sub.add_parser("decide", help="decide existence for one matrix cell")
    _add_common(p_decide)
    _add_cell(p_decide)
    p_decide.add_argument(
        "--oracle",
        action="store_true",
        help="re-verify the verdict by exhaustive search",
    )
    p_decide.set_defaults(func=cmd_decide)

    p_find = sub.add_parser("find", help="construct a trace for one matrix cell")
    _add_common(p_find)
    _add_cell(p_find)
    p_find.set_defaults(func=cmd_find)

    p_verify = sub.add_parser("verify", help="classify a trace file")
    _add_common(p_verify)
    _add_cell(p_verify)
    p_verify.add_argument("-t", "--trace", required=True, help="trace file")
    p_verify.set_defaults(func=cmd_verify)

    p_def = sub.add_parser("deficiency", help="betti number and deficiencies")
    _add_common(p_def)
    p_def.add_argument(
        "-d", type=int, default=None, help="degree threshold for qualified deficiency"
    )
    p_def.set_defaults(func=cmd_deficiency)

    p_table = sub.add_parser("table", help="evaluate the full matrix")
    _add_common(p_table)
    p_table.add_argument(
        "-d",
        dest="d_list",
        type=lambda s: [int(x) for x in s.split(",")],
        default=None,
        help="comma-separated stability orders (default: 1)",
    )
    p_table.add_argument(
        "--oracle",
        action="store_true",
        help="re-verify every cell by exhaustive search",
    )
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TraceForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
