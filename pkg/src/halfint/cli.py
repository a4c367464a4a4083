"""Command-line reports for the library's certified computations.

Four subcommands cover the polytope family, zonotope recognition, flow
congestion, and raw graph utilities.  Output is deterministic byte for
byte: JSON keys are sorted, lists are sorted by construction, and all
numbers are exact rational strings (``--approx`` adds a decimal
rendering next to them for human readers).

Exit codes: 0 on success, 2 for usage or desk-scale guard violations,
3 when a mathematical precondition fails (e.g. recognizing a zonotope
that is not half-integral).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from decimal import Decimal
from fractions import Fraction
from typing import Optional

from .flows import (
    Routing,
    bitfix_routing,
    congestion,
    expansion_lower_bound,
    hexagon_routing,
    product_routing,
    punctured_routing,
)
from .graphs import Graph, cartesian_product, expansion_bruteforce
from .skeleton import skeleton_graph, skeleton_report
from .sparse_cut import build, counts_to_json, cut_report
from .zonotopes import (
    GeneratorSet,
    NotHalfIntegralError,
    is_half_integral,
    realize_half_integral,
    recognize_graphical,
    zonotope_vertices,
)

SKELETON_MAX_DIMENSION = 7

_RATIONAL = re.compile(r"-?\d+/\d+\Z")


class UsageError(Exception):
    """Bad arguments or a desk-scale guard violation (exit code 2)."""


def _approx(text: str) -> str:
    num, den = text.split("/")
    value = Decimal(num) / Decimal(den)
    return str(value.quantize(Decimal("0.000001")))


def _approx_map(payload, prefix: str = "") -> dict[str, str]:
    """Flattened decimal renderings of every p/q string in ``payload``."""
    out: dict[str, str] = {}
    if isinstance(payload, dict):
        items = payload.items()
    elif isinstance(payload, list):
        items = ((str(i), v) for i, v in enumerate(payload))
    else:
        return out
    for key, value in items:
        path = "%s.%s" % (prefix, key) if prefix else str(key)
        if isinstance(value, str) and _RATIONAL.match(value):
            out[path] = _approx(value)
        else:
            out.update(_approx_map(value, path))
    return out


def _render_text(payload: dict, approx: bool) -> str:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (dict, list)):
            rendered = json.dumps(value, sort_keys=True)
        else:
            rendered = str(value)
        if approx and isinstance(value, str) and _RATIONAL.match(value):
            rendered += " (~%s)" % _approx(value)
        lines.append("%s: %s" % (key, rendered))
    return "\n".join(lines) + "\n"


def _emit(args, payload: dict, graph: Optional[Graph] = None) -> None:
    if args.format == "dot":
        if graph is None:
            raise UsageError("this report has no DOT rendering")
        text = graph.to_dot()
    elif args.format == "text":
        text = _render_text(payload, args.approx)
    else:
        if args.approx:
            approx = _approx_map(payload)
            if approx:
                payload = dict(payload, approx=approx)
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


def _load_json(path: Optional[str]):
    try:
        if path is None or path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read input: %s" % exc)


def _load_generators(path: Optional[str]) -> GeneratorSet:
    data = _load_json(path)
    try:
        return GeneratorSet.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError("malformed generator input: %s" % exc)


def _load_graph(path: Optional[str]) -> Graph:
    data = _load_json(path)
    try:
        return Graph.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("malformed graph input: %s" % exc)


def _cmd_sparsecut(args) -> int:
    if args.report == "counts":
        _emit(args, counts_to_json(args.d))
    elif args.report == "cut":
        _emit(args, cut_report(args.d).to_json())
    else:
        if args.d > SKELETON_MAX_DIMENSION:
            raise UsageError(
                "skeleton reports are limited to d <= %d" % SKELETON_MAX_DIMENSION
            )
        instance = build(args.d)
        graph = skeleton_graph(instance.vertices)
        _emit(args, skeleton_report(instance.vertices, graph), graph)
    return 0


def _cmd_zono(args) -> int:
    if args.action == "realize":
        graph = _load_graph(args.input)
        _emit(args, realize_half_integral(graph).to_json())
        return 0
    gens = _load_generators(args.input)
    if args.action == "vertices":
        points = zonotope_vertices(gens)
        payload = dict(points.to_json(), vertex_count=len(points))
        _emit(args, payload)
    elif args.action == "check":
        verdict, translation = is_half_integral(gens)
        payload = {
            "half_integral": verdict,
            "translation": [str(t) for t in translation] if verdict else None,
        }
        _emit(args, payload)
    else:
        decomposition = recognize_graphical(gens)
        _emit(args, decomposition.to_json(), decomposition.graph)
    return 0


_FACTOR = re.compile(r"(cube|punctured):(\d+)\Z")


def _parse_factor(token: str) -> Routing:
    if token == "hexagon":
        return hexagon_routing()
    match = _FACTOR.match(token)
    if match is None:
        raise UsageError(
            "bad factor %r (expected cube:<d>, punctured:<d>, or hexagon)" % token
        )
    family, d = match.group(1), int(match.group(2))
    return bitfix_routing(d) if family == "cube" else punctured_routing(d)


def _cmd_flow(args) -> int:
    if args.family == "hexagon":
        if args.d is not None:
            raise UsageError("the hexagon family takes no dimension")
        routing = hexagon_routing()
    elif args.family == "product":
        if not args.factors:
            raise UsageError("the product family requires --factors")
        factors = [_parse_factor(tok) for tok in args.factors.split(",")]
        if len(factors) < 2:
            raise UsageError("the product family needs at least two factors")
        routing = factors[0]
        for other in factors[1:]:
            routing = product_routing(routing, other)
    else:
        if args.d is None:
            raise UsageError("--d is required for family %r" % args.family)
        maker = bitfix_routing if args.family == "cube" else punctured_routing
        routing = maker(args.d)
    report = congestion(routing)
    payload = dict(
        report.to_json(),
        family=args.family,
        expansion_lower_bound=str(expansion_lower_bound(report)),
    )
    if args.routing:
        payload["routing"] = routing.to_json()
    _emit(args, payload)
    return 0


def _cmd_graph(args) -> int:
    graph = _load_graph(args.input)
    if args.action == "expansion":
        value, witness = expansion_bruteforce(graph)
        payload = {"expansion": str(value), "witness": witness.to_json(graph)}
        _emit(args, payload)
    else:
        if args.input2 is None:
            raise UsageError("the product action requires a second graph (--in2)")
        product = cartesian_product(graph, _load_graph(args.input2))
        _emit(args, product.to_json(), product)
    return 0


def _add_common(sub) -> None:
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument(
        "--format", choices=("json", "dot", "text"), default="json"
    )
    sub.add_argument(
        "--approx",
        action="store_true",
        help="append decimal renderings of exact rationals",
    )
    sub.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker hint (computations are single-threaded; accepted for "
        "interface stability, HALFINT_THREADS is the fallback)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfint",
        description="exact reports on half-integral polytopes, zonotopes, "
        "flow congestion, and graph expansion",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sc = commands.add_parser("sparsecut", help="low-expansion polytope family")
    sc.add_argument("--d", type=int, required=True, help="dimension, 3 mod 4")
    sc.add_argument(
        "--report", choices=("counts", "cut", "skeleton"), default="counts"
    )
    _add_common(sc)
    sc.set_defaults(func=_cmd_sparsecut)

    zn = commands.add_parser("zono", help="half-integral zonotope tools")
    zn.add_argument(
        "--action",
        choices=("vertices", "check", "recognize", "realize"),
        required=True,
    )
    zn.add_argument(
        "--in", dest="input", default=None, help="input JSON path (default stdin)"
    )
    _add_common(zn)
    zn.set_defaults(func=_cmd_zono)

    fl = commands.add_parser("flow", help="routing congestion certificates")
    fl.add_argument(
        "--family",
        choices=("cube", "punctured", "hexagon", "product"),
        required=True,
    )
    fl.add_argument("--d", type=int, default=None)
    fl.add_argument(
        "--factors",
        default=None,
        help="comma-separated product factors, e.g. cube:2,hexagon",
    )
    fl.add_argument(
        "--routing", action="store_true", help="embed the full routing JSON"
    )
    _add_common(fl)
    fl.set_defaults(func=_cmd_flow)

    gr = commands.add_parser("graph", help="exact expansion and products")
    gr.add_argument("--action", choices=("expansion", "product"), required=True)
    gr.add_argument(
        "--in", dest="input", default=None, help="graph JSON path (default stdin)"
    )
    gr.add_argument(
        "--in2", dest="input2", default=None, help="second graph JSON path"
    )
    _add_common(gr)
    gr.set_defaults(func=_cmd_graph)

    return parser


def _resolve_threads(args) -> None:
    if args.threads is None:
        env = os.environ.get("HALFINT_THREADS")
        if env is not None:
            if not env.isdigit() or int(env) < 1:
                raise UsageError("HALFINT_THREADS must be a positive integer")
            args.threads = int(env)
    elif args.threads < 1:
        raise UsageError("--threads must be a positive integer")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _resolve_threads(args)
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except NotHalfIntegralError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
