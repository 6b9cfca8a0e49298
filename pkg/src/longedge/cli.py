"""Command-line surface: exact values on stdout, machine records via --json.

Every numeric value is printed exactly, as a decimal or "p/q" string;
nothing here ever goes through floating point.  Exit codes: 0 success,
1 verification failure, 2 usage or guard error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .acceptance import run_criteria
from .counting import severi_degree, n_graph
from .floor_diagrams import fmcount
from .graphs import (
    automorphism_count,
    cogenus,
    format_graph_text,
    multiplicity,
    offset,
    parse_graph_text,
)
from .polynomials import RationalPolynomial, node_polynomial
from .qcalc import q_delta_log, q_delta_templates, q_graph
from .templates import enumerate_templates, min_allowable_offset

TEMPLATES_MAX_DELTA = 10
SEVERI_MAX_DELTA = 8


def _record(command: str, params: dict, value: str, method: str, started: float) -> dict:
    return {
        "command": command,
        "params": params,
        "value": value,
        "method": method,
        "ms": int((time.perf_counter() - started) * 1000),
    }


def _emit_value(args, record: dict) -> int:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(record["value"])
    return 0


def _cmd_templates(args) -> int:
    if not (0 <= args.delta <= TEMPLATES_MAX_DELTA):
        raise ValueError(f"--delta must be in 0..{TEMPLATES_MAX_DELTA}")
    catalog = enumerate_templates(args.delta)
    if args.json:
        payload = [
            {
                "edges": [[e.start, e.end, e.weight] for e in t.edges],
                "delta": str(cogenus(t)),
                "mu": str(multiplicity(t)),
                "alpha": str(automorphism_count(t)),
                "k_min": str(min_allowable_offset(t)),
            }
            for t in catalog
        ]
        print(json.dumps(payload, sort_keys=True))
        return 0
    for i, t in enumerate(catalog):
        print(f"# template {i + 1}: delta={cogenus(t)} mu={multiplicity(t)} "
              f"alpha={automorphism_count(t)} k_min={min_allowable_offset(t)}")
        print(format_graph_text(t))
    if not len(catalog):
        print("# no templates")
    return 0


def _cmd_severi(args) -> int:
    started = time.perf_counter()
    if not (0 <= args.delta <= SEVERI_MAX_DELTA):
        raise ValueError(f"--delta must be in 0..{SEVERI_MAX_DELTA}")
    if args.d < 1:
        raise ValueError("--d must be >= 1")
    if args.method == "floor":
        value = fmcount(args.d, args.delta)
    else:
        value = severi_degree(args.d, args.delta, jobs=args.jobs)
    record = _record(
        "severi",
        {"d": args.d, "delta": args.delta},
        str(value),
        args.method,
        started,
    )
    return _emit_value(args, record)


_FACTORED_FORMS: dict[int, tuple[str, RationalPolynomial]] = {}


def _factored_form(delta: int) -> tuple[str, RationalPolynomial] | None:
    if not _FACTORED_FORMS:
        linear = lambda c: RationalPolynomial.from_coefficients([c, 1])  # noqa: E731
        one = (linear(-1) * linear(-1)).scale(3)
        _FACTORED_FORMS[1] = ("3*(d - 1)^2", one)
        two = (
            linear(-1)
            * linear(-2)
            * RationalPolynomial.from_coefficients([-11, -3, 3])
        ).scale(Fraction(3, 2))
        _FACTORED_FORMS[2] = ("(3/2)*(d - 1)*(d - 2)*(3*d^2 - 3*d - 11)", two)
    return _FACTORED_FORMS.get(delta)


def _cmd_node_poly(args) -> int:
    started = time.perf_counter()
    poly = node_polynomial(args.delta)
    if args.json:
        record = {
            "command": "node-poly",
            "params": {"delta": args.delta},
            "coefficients": poly.to_strings(),
            "method": "templates",
            "ms": int((time.perf_counter() - started) * 1000),
        }
        print(json.dumps(record, sort_keys=True))
        return 0
    print(poly.pretty("d"))
    print(f"coefficients (constant first): {poly.to_strings()}")
    known = _factored_form(args.delta)
    if known is not None and known[1] == poly:
        print(f"factored: {known[0]}")
    return 0


def _cmd_q(args) -> int:
    started = time.perf_counter()
    if not (1 <= args.delta <= SEVERI_MAX_DELTA):
        raise ValueError(f"--delta must be in 1..{SEVERI_MAX_DELTA}")
    if args.route == "log":
        value = q_delta_log(args.d, args.delta)
    else:
        value = q_delta_templates(args.d, args.delta)
    record = _record(
        "q", {"d": args.d, "delta": args.delta}, str(value), args.route, started
    )
    return _emit_value(args, record)


def _load_graph(args):
    text = Path(args.graph).read_text(encoding="utf-8")
    g = parse_graph_text(text)
    if args.k:
        g = offset(g, args.k)
    return g


def _cmd_n_graph(args) -> int:
    started = time.perf_counter()
    g = _load_graph(args)
    value = n_graph(g, args.d)
    record = _record(
        "n-graph",
        {"d": args.d, "file": args.graph, "k": args.k},
        str(value),
        "templates",
        started,
    )
    return _emit_value(args, record)


def _cmd_q_graph(args) -> int:
    started = time.perf_counter()
    g = _load_graph(args)
    value = q_graph(g, args.d)
    record = _record(
        "q-graph",
        {"d": args.d, "file": args.graph, "k": args.k},
        str(value),
        "templates",
        started,
    )
    return _emit_value(args, record)


def _cmd_verify(args) -> int:
    outcomes = run_criteria(args.level)
    if args.json:
        payload = [
            {
                "name": o.name,
                "passed": o.passed,
                "detail": o.detail,
                "seconds": round(o.seconds, 3),
            }
            for o in outcomes
        ]
        print(json.dumps(payload, sort_keys=True))
    else:
        for o in outcomes:
            tag = "PASS" if o.passed else "FAIL"
            print(f"[{tag}] {o.name} ({o.seconds:.2f} s) {o.detail}")
    failures = [o for o in outcomes if not o.passed]
    if failures:
        print(f"FAILED: {failures[0].name}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="longedge",
        description="Exact Severi degrees and log-series quantities from long-edge graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("templates", help="list all templates of one cogenus")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_templates)

    p = sub.add_parser("severi", help="Severi degree N^{d,delta}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--method", choices=("templates", "floor"), default="templates")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_severi)

    p = sub.add_parser("node-poly", help="node polynomial for a node count")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_node_poly)

    p = sub.add_parser("q", help="log-series coefficient Q^{d,delta}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--route", choices=("templates", "log"), default="templates")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_q)

    p = sub.add_parser("n-graph", help="weighted ordering count of a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=0, help="extra rightward offset")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_n_graph)

    p = sub.add_parser("q-graph", help="log quantity of a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=0, help="extra rightward offset")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_q_graph)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
