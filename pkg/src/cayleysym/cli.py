"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from .analysis import verify_non_arc_transitive_locally
from .cayley import check_generating_conditions, doyle_graph
from .errors import CayleySymError, ParseError
from .finite_group import evaluate_word, make_modular27
from .graph_core import Graph, from_graph6, is_regular, to_dot, to_edgelist, to_graph6
from .metrics import ball_subgraph, is_connected
from .symmetry import classify

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
FORMATS = ("graph6", "dot", "edgelist")


def render(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g).decode("ascii") + "\n"
    if fmt == "dot":
        return to_dot(g)
    return to_edgelist(g)


def _open_input(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path, "r", encoding="ascii", errors="replace")


def read_graph6_lines(path: str):
    """Yield ``(line_number, graph or ParseError)`` for each non-blank line."""
    stream = _open_input(path)
    try:
        for lineno, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, from_graph6(line)
            except CayleySymError as exc:
                yield lineno, ParseError(f"line {lineno}: {exc}")
    finally:
        if stream is not sys.stdin:
            stream.close()


def _single_graph(path: Optional[str]) -> Graph:
    if path is None:
        return doyle_graph()
    for _, item in read_graph6_lines(path):
        if isinstance(item, Exception):
            raise item
        return item
    raise ParseError(f"no graph found in {path}")


def cmd_doyle(args) -> int:
    sys.stdout.write(render(doyle_graph(), args.format))
    return EXIT_OK


def _report_line(report) -> str:
    return " ".join(f"{k}={'-' if v is None else v}" for k, v in report.to_dict().items())


def cmd_analyze(args) -> int:
    status = EXIT_OK
    for lineno, item in read_graph6_lines(args.input):
        if isinstance(item, Exception):
            print(f"error: {item}", file=sys.stderr)
            status = EXIT_USAGE
            continue
        report = classify(item)
        if args.json:
            print(report.to_json())
        else:
            print(f"line {lineno}: {_report_line(report)}")
    return status


@dataclass
class Stage:
    name: str
    passed: bool
    detail: str


def _stage_group():
    G = make_modular27()
    relations = {
        "a^9=e": [("a", 9)],
        "b^3=e": [("b", 3)],
        "b^-1 a b=a^4": [("b", -1), ("a", 1), ("b", 1), ("a", -4)],
        "c^9=e": [("c", 9)],
        "c^3=a^-3": [("c", 3), ("a", 3)],
        "a^3=c^-3": [("a", 3), ("c", 3)],
        "c^-1 a c=a^4": [("c", -1), ("a", 1), ("c", 1), ("a", -4)],
        "a^-1 c a=c^4": [("a", -1), ("c", 1), ("a", 1), ("c", -4)],
    }
    failed = [name for name, word in relations.items() if evaluate_word(G, word) != 0]
    return G, Stage("group", not failed,
                    f"order {G.order}, {len(relations)} relations checked"
                    + (f", failing: {failed}" if failed else ""))


def _stage_conditions(G):
    a, c = G["a"], G["c"]
    rep = check_generating_conditions(G, [a, c])
    swap = any(phi(a) == c and phi(c) == a for phi in rep.automorphisms)
    ok = rep.cond1 and rep.cond2 and rep.cond3 and rep.generates and swap
    detail = (f"cond1={rep.cond1} cond2={rep.cond2} cond3={rep.cond3} generates={rep.generates} "
              f"a<->c swap={swap} |Aut(G)|={len(rep.automorphisms)}")
    return rep, Stage("conditions", ok, detail)


def run_verify_doyle(g: Optional[Graph] = None):
    """Run every verification stage; returns (stages, extra JSON payload)."""
    stages: List[Stage] = []
    payload = {}
    G, stage = _stage_group()
    stages.append(stage)
    rep, stage = _stage_conditions(G)
    stages.append(stage)
    payload["conditions"] = rep.summary(G)

    if g is None:
        g = doyle_graph()
    degree = is_regular(g)
    shape_ok = g.n == 27 and degree == 4 and g.edge_count == 54 and is_connected(g)
    stages.append(Stage("graph", shape_ok,
                        f"n={g.n} edges={g.edge_count} regular_degree={degree} connected={is_connected(g)}"))

    report = classify(g)
    payload["report"] = report.to_dict()
    stages.append(Stage("classify", report.classification == "half-transitive",
                        f"classification={report.classification} aut_order={report.aut_order} "
                        f"orbits v/e/arc={report.vertex_orbit_count}/{report.edge_orbit_count}/"
                        f"{report.arc_orbit_count}"))

    a = G["a"]
    try:
        cert = verify_non_arc_transitive_locally(g, G.identity, a, G.inverse_table[a], r=2)
    except CayleySymError as exc:
        stages.append(Stage("obstruction", False, str(exc)))
    else:
        payload["certificate"] = cert.to_dict()
        stages.append(Stage("obstruction", cert.conclusion,
                            f"ball_size={cert.ball_size} fixing_aut_count={cert.fixing_aut_count} "
                            f"reversal_found={cert.reversal_found} conclusion={cert.conclusion}"))
    return stages, payload


def cmd_verify_doyle(args) -> int:
    g = _single_graph(args.input)
    stages, payload = run_verify_doyle(g)
    ok = all(s.passed for s in stages)
    if args.json:
        payload["stages"] = [vars(s) for s in stages]
        payload["ok"] = ok
        print(json.dumps(payload))
    else:
        for s in stages:
            print(f"{'PASS' if s.passed else 'FAIL'} {s.name}: {s.detail}")
        failed = [s.name for s in stages if not s.passed]
        print("verified: half-transitive" if ok else f"verification failed at: {', '.join(failed)}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_ball(args) -> int:
    g = _single_graph(args.input)
    if not 0 <= args.center < g.n:
        print(f"error: center {args.center} out of range [0, {g.n})", file=sys.stderr)
        return EXIT_USAGE
    if args.radius < 0:
        print("error: radius must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    ball = ball_subgraph(g, args.center, args.radius)
    labels = [f"{v}: {g.label(v)}" for v in ball.vertex_map]
    sub = ball.graph.with_labels(labels)
    sys.stdout.write(render(sub, args.format))
    if args.format != "dot":
        for k, v in enumerate(ball.vertex_map):
            print(f"{k} {v} {g.label(v)}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleysym",
        description="Cayley graph construction and symmetry classification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("doyle", help="emit the 27-vertex half-transitive graph")
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.set_defaults(func=cmd_doyle)

    p = sub.add_parser("analyze", help="classify graph6 graphs, one per line")
    p.add_argument("input", nargs="?", default="-", help="graph6 file, or - for stdin")
    p.add_argument("--json", action="store_true", help="newline-delimited JSON reports")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify-doyle", help="run the full half-transitivity certificate")
    p.add_argument("input", nargs="?", default=None,
                   help="graph6 file or - (default: the constructed graph)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_doyle)

    p = sub.add_parser("ball", help="emit the induced ball around a vertex")
    p.add_argument("input", nargs="?", default=None,
                   help="graph6 file or - (default: the constructed graph)")
    p.add_argument("--center", type=int, default=0)
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.set_defaults(func=cmd_ball)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
