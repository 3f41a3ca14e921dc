"""Command line entry point: build solids, export graphs, compute groups, verify, search."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import graph6
from .canon import automorphism_group
from .graph import (NoWheel, build_xi, dot_export, find_wheel, one_skeleton,
                    projective_vertex_face_graph, vertex_face_graph)
from .groups import identify_group, parse_group_name
from .perm import ENUMERATION_BOUND
from .polyhedra import SOLIDS
from .search import mu_search
from .verify import ALL, VERIFIERS

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def build_graph(kind: str, solid: str, hub: int = 0):
    P = SOLIDS[solid]()
    if kind == "skeleton":
        return one_skeleton(P)
    if kind == "gamma":
        return vertex_face_graph(P)
    pi, pairing = projective_vertex_face_graph(P)
    if kind == "pi":
        return pi
    if not 0 <= hub < len(P.vertices):
        raise UsageError(f"hub must be in 0..{len(P.vertices) - 1}")
    try:
        w = find_wheel(one_skeleton(P), pairing, hub)
    except NoWheel as exc:
        raise UsageError(f"{solid} has no 5-wheel at hub {hub}: {exc}") from exc
    return build_xi(pi, pairing, w)


def _write(text: str | bytes, out: str | None):
    if isinstance(text, str):
        text = text.encode()
    if out in (None, "-"):
        sys.stdout.buffer.write(text)
        sys.stdout.flush()
    else:
        with open(out, "wb") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    P = SOLIDS[args.solid]()
    print(f"{args.solid}: V={len(P.vertices)} E={len(P.edges)} F={len(P.faces)} "
          f"chi={len(P.vertices) - len(P.edges) + len(P.faces)}", file=sys.stderr if args.json == "-" else sys.stdout)
    if args.json:
        _write(json.dumps(P.to_json()) + "\n", args.json)
    return EXIT_OK


def cmd_graph(args) -> int:
    G = build_graph(args.kind, args.solid, args.hub)
    if args.format == "g6":
        _write(graph6.encode(G) + b"\n", args.out)
    else:
        _write(dot_export(G, name=args.kind), args.out)
    return EXIT_OK


def _read_graphs(path: str):
    if path == "-":
        data = sys.stdin.buffer.read().splitlines()
    else:
        with open(path, "rb") as fh:
            data = fh.read().splitlines()
    return [graph6.decode(line) for line in data if line.strip()]


def cmd_aut(args) -> int:
    try:
        graphs = _read_graphs(args.file)
    except graph6.MalformedGraph6 as exc:
        raise UsageError(f"bad graph6 input: {exc}") from exc
    for G in graphs:
        A = automorphism_group(G)
        name = str(identify_group(A)) if A.order() <= ENUMERATION_BOUND else "Unknown"
        print(f"order {A.order()}, {name}")
        for g in A.generators:
            print("  " + " ".join(map(str, g.images)))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(ALL) if args.claim == "all" else [args.claim]
    reports = [VERIFIERS[k]() for k in names]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2))
    else:
        for r in reports:
            print(r.summary())
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FAIL


def cmd_search(args) -> int:
    try:
        target = parse_group_name(args.group)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        report = mu_search(target, args.max_n, stretch=args.stretch,
                           progress=lambda n, c: print(f"n={n}: {c} classes", file=sys.stderr))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        print(report.describe())
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="icosaut", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a solid and optionally dump it as JSON")
    b.add_argument("solid", choices=sorted(SOLIDS))
    b.add_argument("--json", metavar="OUT", help="write the polyhedron JSON here ('-' for stdout)")
    b.set_defaults(func=cmd_build)

    for name in ("graph", "export"):
        g = sub.add_parser(name, help="emit one of the derived graphs")
        g.add_argument("kind", choices=["pi", "xi", "gamma", "skeleton"])
        g.add_argument("--solid", choices=sorted(SOLIDS), default="icosahedron")
        g.add_argument("--hub", type=int, default=0)
        g.add_argument("--format", choices=["g6", "dot"], default="g6")
        g.add_argument("--out", default=None)
        g.set_defaults(func=cmd_graph)

    a = sub.add_parser("aut", help="automorphism group of each graph in a graph6 file ('-' for stdin)")
    a.add_argument("file")
    a.set_defaults(func=cmd_aut)

    v = sub.add_parser("verify", help="run the machine checks")
    v.add_argument("claim", choices=list(VERIFIERS) + ["all"])
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="smallest graph with a given automorphism group")
    s.add_argument("--group", required=True)
    s.add_argument("--max-n", type=int, default=7)
    s.add_argument("--stretch", action="store_true", help="allow n up to 9 (slow)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"icosaut: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
