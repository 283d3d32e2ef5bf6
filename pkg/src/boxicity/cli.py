"""Command-line front end.

Every subcommand prints a single JSON document on stdout.  Exit codes:
0 success, 1 invalid input, 2 verification failure, 3 time budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import families
from .boxes import BoxRepresentation, boxes_to_cover, intersection_graph_of_boxes, local_cover_to_boxes, product_of_representations, union_cover_to_boxes
from .certificates import make_certificate, read_certificate, verify_certificate
from .covers import PLAIN, UNION, CoCover, CoverError
from .graph import Graph, Graph6Error, complement, parse_graph6, serialize_graph6
from .interval import is_chordal, is_co_interval, is_interval, is_union_co_interval
from .solvers import BudgetExceeded, box_f, boxicity, local_boxicity, local_boxicity_union_class, union_boxicity

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


FAMILIES = {
    "matching": (families.matching, 1),
    "complete": (families.complete, 1),
    "cycle": (families.cycle, 1),
    "path": (families.path, 1),
    "star": (families.star, 1),
    "octahedron": (families.octahedron, 0),
    "petersen": (families.petersen, 0),
    "line-of-complete": (families.line_of_complete, 1),
    "projective": (families.projective_incidence, 1),
}


def _family(name: str, params: list[str], seed: int) -> Graph:
    if name == "random":
        if len(params) != 2:
            raise InputError("random needs N P")
        n, p = int(params[0]), float(params[1])
        rng = random.Random(seed)
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    if name not in FAMILIES:
        raise InputError(f"unknown family {name!r}; choose from {sorted(FAMILIES) + ['random']}")
    fn, arity = FAMILIES[name]
    if len(params) != arity:
        raise InputError(f"family {name} takes {arity} integer parameter(s)")
    return fn(*map(int, params))


def _read_graph(args) -> Graph:
    sources = [x is not None for x in (args.graph6, args.file, args.family)]
    if sum(sources) != 1:
        raise InputError("give exactly one input: a graph6 string, --file or --family")
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.family is not None:
        return _family(args.family[0], args.family[1:], args.seed)
    text = _read_text(args.file)
    if args.format == "edgelist-json":
        return Graph.from_json(json.loads(text))
    return parse_graph6(text.split()[0] if text.split() else "")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_json(path: str) -> dict:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _emit(args, payload) -> None:
    text = json.dumps(payload, indent=2)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _solve(args, parameter: str) -> int:
    h = _read_graph(args)
    budget = args.time_budget_seconds
    if parameter == "box":
        value, cover = boxicity(h, budget)
    elif parameter == "unionbox":
        value, cover = union_boxicity(h, budget)
    elif args.cls == UNION:
        value, cover = local_boxicity_union_class(h, budget)
    else:
        value, cover, _ = local_boxicity(h, budget)
    _emit(args, make_certificate(parameter, h, value, cover))
    return EXIT_OK


def cmd_boxf(args) -> int:
    h = _read_graph(args)
    value = box_f(h)
    _emit(args, {"parameter": "boxf", "value": 1 if value == 1 else "infinity", "host_graph6": serialize_graph6(h)})
    return EXIT_OK


def cmd_chia(args) -> int:
    h = _read_graph(args)
    k, col = families.acyclic_chromatic_number(h)
    _emit(args, {"parameter": "chia", "value": k, "host_graph6": serialize_graph6(h), "coloring": col.to_json()})
    return EXIT_OK


def cmd_recognize(args) -> int:
    h = _read_graph(args)
    _emit(args, {
        "interval": is_interval(h),
        "co_interval": is_co_interval(h),
        "union_co_interval": is_union_co_interval(h),
        "chordal": is_chordal(h),
    })
    return EXIT_OK


def cmd_gen(args) -> int:
    g = _family(args.name, args.params, args.seed)
    if args.format == "edgelist-json":
        _emit(args, g.to_json())
    else:
        _emit(args, {"graph6": serialize_graph6(g), "n": g.n, "m": g.m})
    return EXIT_OK


def cmd_verify(args) -> int:
    data = _read_json(args.certificate)
    try:
        stats = verify_certificate(data)
    except CoverError as exc:
        _emit(args, {"verified": False, "error": str(exc)})
        return EXIT_VERIFY
    report = {"verified": True, "t": stats.t, "s": stats.s}
    if args.exact:
        parameter, value, h, _ = read_certificate(data)
        solver = {"box": boxicity, "unionbox": union_boxicity, "localbox": local_boxicity}[parameter]
        optimum = solver(h, args.time_budget_seconds)[0]
        report["optimal"] = optimum == value
        if optimum != value:
            report.update(verified=False, error=f"value {value} is not optimal ({optimum})")
            _emit(args, report)
            return EXIT_VERIFY
    _emit(args, report)
    return EXIT_OK


def cmd_boxes(args) -> int:
    data = _read_json(args.certificate)
    try:
        verify_certificate(data)
    except CoverError as exc:
        _emit(args, {"verified": False, "error": str(exc)})
        return EXIT_VERIFY
    _, _, h, cover = read_certificate(data)
    if cover.class_flag == PLAIN:
        rep = local_cover_to_boxes(cover, h)
    else:
        # one 1-local factor per union-class bag
        factors = [
            union_cover_to_boxes(CoCover(Graph(cover.host.n, bag), (bag,), UNION))
            for bag in cover.bags
        ]
        rep = product_of_representations(factors) if factors else BoxRepresentation(0, ((),) * h.n)
    if intersection_graph_of_boxes(rep) != h:
        _emit(args, {"verified": False, "error": "box representation does not reproduce the graph"})
        return EXIT_VERIFY
    _emit(args, rep.to_json())
    return EXIT_OK


def cmd_project(args) -> int:
    rep = BoxRepresentation.from_json(_read_json(args.representation))
    h = intersection_graph_of_boxes(rep)
    cover = boxes_to_cover(rep)
    stats = cover.stats()
    _emit(args, make_certificate("localbox", h, stats.s, cover))
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph6", nargs="?", help="graph in graph6 format")
    p.add_argument("--file", help="read the graph from a file ('-' for stdin)")
    p.add_argument("--family", nargs="+", metavar=("NAME", "PARAM"), help="generate the input graph")
    p.add_argument("--format", choices=["graph6", "edgelist-json"], default="graph6")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxicity", description="Exact boxicity, local and union boxicity with certificates.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("box", "localbox", "unionbox"):
        p = sub.add_parser(name, help=f"compute {name} with a certificate")
        _add_input(p)
        p.add_argument("--time-budget-seconds", type=float, default=60.0)
        if name == "localbox":
            p.add_argument("--class", dest="cls", choices=[PLAIN, UNION], default=PLAIN)
        p.set_defaults(func=lambda a, name=name: _solve(a, name))
    for name, func, text in (
        ("boxf", cmd_boxf, "folded boxicity (1 or infinity)"),
        ("chia", cmd_chia, "acyclic chromatic number with a coloring"),
        ("recognize", cmd_recognize, "interval / co-interval / chordal tests"),
    ):
        p = sub.add_parser(name, help=text)
        _add_input(p)
        p.set_defaults(func=func)
    p = sub.add_parser("gen", help="generate a named family")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=["graph6", "edgelist-json"], default="graph6")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    p = sub.add_parser("verify", help="verify a certificate JSON")
    p.add_argument("certificate", help="certificate file ('-' for stdin)")
    p.add_argument("--exact", action="store_true", help="also re-solve and check optimality")
    p.add_argument("--time-budget-seconds", type=float, default=60.0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("boxes", help="certificate to box representation")
    p.add_argument("certificate")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_boxes)
    p = sub.add_parser("project", help="box representation to cover certificate")
    p.add_argument("representation")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_project)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        payload = {
            "parameter": exc.parameter,
            "budget_exceeded": True,
            "lower": exc.lower,
            "upper": exc.upper,
            "complement_cover": exc.cover.to_json(),
        }
        _emit(args, payload)
        return EXIT_BUDGET
    except (InputError, Graph6Error, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
