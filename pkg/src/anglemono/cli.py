"""Command-line front end: ``anglemono <subcommand> ...``.

Exit status is 0 on success, 1 when a decision comes out negative and 2 on bad
input.  Results go to stdout as one line; files are written only when asked.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Optional, Sequence

from . import io
from .errors import AngleMonoError

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2
FAMILIES = ("random", "grid", "gabriel-worst", "general-worst", "delaunay-lb", "fan-lb", "no-sa", "ngon")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _num(x: float) -> str:
    return io.fmt(x)


def _write_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return float(v)


# ---------------------------------------------------------------- subcommands

def cmd_triangulate(args) -> int:
    from .halftheta import build_half_theta6
    from .triangulation import delaunay, gabriel_graph

    pts = io.load_points(args.points)
    if args.kind == "delaunay":
        t = delaunay(pts)
        io.save_triangulation(t, args.out)
        print(f"{t.n} {len(t.triangles)}")
    elif args.kind == "gabriel":
        g = gabriel_graph(pts)
        io.save_graph(g, args.out)
        print(f"{g.n} {g.m}")
    else:
        g = build_half_theta6(pts)
        io.save_graph(g, args.out, cones=g.attribution)
        print(f"{g.n} {g.m}")
    return EXIT_OK


def _need(args, name: str):
    v = getattr(args, name)
    if v is None:
        raise _UsageError(f"--family {args.family} needs --{name.replace('_', '-')}")
    return v


def cmd_generate(args) -> int:
    from . import generators as gen
    from .graph import GeometricGraph

    fam = args.family
    marks, info = {}, {}
    if fam == "random":
        n = _need(args, "n")
        if args.p is None:
            io.save_points(gen.gen_random(n, args.seed), args.out)
            print(n)
            return EXIT_OK
        obj = gen.gen_random_graph(n, args.p, args.seed)
    elif fam == "ngon":
        io.save_points(gen.gen_regular_ngon(_need(args, "n"), args.seed), args.out)
        print(args.n)
        return EXIT_OK
    elif fam == "grid":
        obj = gen.gen_grid_gabriel(_need(args, "m"))
    else:
        if fam == "gabriel-worst":
            g = gen.gen_gabriel_worstcase(args.eps)
        elif fam == "general-worst":
            g = gen.gen_general_worstcase(math.radians(_need(args, "alpha")), args.eps)
        elif fam == "delaunay-lb":
            g = gen.gen_delaunay_lowerbound(args.delta, args.arc_density)
        elif fam == "fan-lb":
            pair = gen.gen_fan_lowerbound(args.k)
            g = pair.second if args.mirrored else pair.first
            info = {
                "deception_ratio": pair.deception_ratio,
                "competitive_ratio": pair.competitive_ratio,
                "st_length": pair.st_length,
            }
        else:
            g = gen.gen_no_self_approaching(args.k)
        obj = g.triangulation
        marks = dict(g.marks)
        info = {**g.info, **info}
    if isinstance(obj, GeometricGraph):
        io.save_graph(obj, args.out)
        print(f"{obj.n} {obj.m}")
    else:
        io.save_triangulation(obj, args.out)
        print(f"{obj.n} {len(obj.triangles)}")
    sidecar = args.marks or f"{args.out}.marks.json"
    _write_json({"family": fam, "marks": marks, "info": _jsonable(info)}, sidecar)
    return EXIT_OK


def cmd_check(args) -> int:
    from .recognition import (
        BRUTE_FORCE_MAX_N,
        brute_force_width,
        certificate_path,
        explore_from_source,
        explore_width,
        is_angle_monotone,
        is_angle_monotone_width,
    )

    g = io.load_graph(args.graph)
    gamma = math.radians(args.width)
    if not 0.0 < args.width < 180.0:
        raise _UsageError("--width must lie strictly between 0 and 180")
    right = abs(args.width - 90.0) < 1e-12
    if args.oracle:
        if g.n > BRUTE_FORCE_MAX_N:
            raise _UsageError(f"--oracle is limited to {BRUTE_FORCE_MAX_N} vertices")
        ok = brute_force_width(g, gamma)
        print("yes" if ok else "no")
        return EXIT_OK if ok else EXIT_NO
    if args.certify is not None:
        s, v = args.certify
        for x in (s, v):
            if not 0 <= x < g.n:
                raise _UsageError(f"vertex {x} out of range")
        if args.cert_out is None:
            raise _UsageError("--certify needs --cert-out")
        table = explore_from_source(g, s) if right else explore_width(g, s, gamma)
        if s != v and not table.lists[v]:
            print(f"no {s} {v}")
            return EXIT_NO
        tr = certificate_path(table, s, v)
        io.save_trace(g, tr, args.cert_out)
        print("yes")
        return EXIT_OK
    ok, wit = is_angle_monotone(g) if right else is_angle_monotone_width(g, gamma)
    if ok:
        print("yes")
        return EXIT_OK
    print(f"no {wit[0]} {wit[1]}")
    return EXIT_NO


def cmd_route(args) -> int:
    from .routing import route

    t = io.load_triangulation(args.graph)
    for x in (args.src, args.dst):
        if not 0 <= x < t.n:
            raise _UsageError(f"vertex {x} out of range")
    tr = route(t, args.src, args.dst)
    d = io.trace_dict(t.graph, tr, tr.meta.get("frame_rotation"))
    if args.trace:
        io.save_trace(t.graph, tr, args.trace, tr.meta.get("frame_rotation"))
    print(f"{_num(d['ratio'])} {' '.join(map(str, tr.vertices))}")
    return EXIT_OK


def cmd_metrics(args) -> int:
    from .metrics import ratio_matrix, spanning_ratio

    if args.metric == "spanning-ratio":
        g = io.load_graph(args.graph)
        r, pair = spanning_ratio(g)
        i, j = pair if pair else (0, 0)
        print(f"{_num(r)} {i} {j}")
        if args.all_pairs_csv:
            _write_csv(ratio_matrix(g), args.all_pairs_csv)
        return EXIT_OK
    from .routing import RoutingFrame, route, routing_ratio, routing_ratio_sweep
    from .triangulation import max_angle

    t = io.load_triangulation(args.graph)
    if args.metric == "max-angle":
        print(_num(math.degrees(max_angle(t))))
        return EXIT_OK
    r, pair = routing_ratio_sweep(t)
    i, j = pair if pair else (0, 0)
    print(f"{_num(r)} {i} {j}")
    if args.all_pairs_csv:
        import numpy as np

        mat = np.ones((t.n, t.n))
        for s in range(t.n):
            for d in range(t.n):
                if s != d and t.rings[s] and t.rings[d]:
                    mat[s, d] = routing_ratio(route(t, s, d), RoutingFrame(t.points, s, d))
        _write_csv(mat, args.all_pairs_csv)
    return EXIT_OK


def _write_csv(mat, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        for row in mat:
            w.writerow([_num(x) for x in row])


def cmd_render(args) -> int:
    from .render import render_svg

    g = io.load_graph(args.graph)
    overlays = [io.load_trace(p) for p in args.trace or ()]
    for tr in overlays:
        if any(not 0 <= v < g.n for v in tr.vertices):
            raise _UsageError("trace mentions a vertex outside the graph")
    marks = None
    if args.marks:
        with open(args.marks, encoding="utf-8") as fh:
            data = json.load(fh)
        marks = {str(k): int(v) for k, v in data.get("marks", data).items()}
    render_svg(g, overlays, args.out, marks=marks)
    print(args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="anglemono", description="Angle-monotone graphs and local routing on triangulations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("triangulate", help="Delaunay triangulation, Gabriel graph or half-theta6 graph of a point file")
    q.add_argument("--points", required=True)
    q.add_argument("--out", required=True)
    q.add_argument("--kind", choices=("delaunay", "gabriel", "half-theta6"), default="delaunay")
    q.set_defaults(func=cmd_triangulate)

    q = sub.add_parser("generate", help="write a fixture or gadget")
    q.add_argument("--family", choices=FAMILIES, required=True)
    q.add_argument("--out", required=True)
    q.add_argument("--marks", help="path of the JSON sidecar (default OUT.marks.json)")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--n", type=int)
    q.add_argument("--p", type=float, help="edge probability; random family writes a graph when given")
    q.add_argument("--m", type=int, help="grid cells per side")
    q.add_argument("--eps", type=float, default=1e-3)
    q.add_argument("--alpha", type=float, help="largest angle in degrees")
    q.add_argument("--delta", type=float, default=0.01)
    q.add_argument("--arc-density", type=int, default=64)
    q.add_argument("--k", type=int, default=3)
    q.add_argument("--mirrored", action="store_true")
    q.set_defaults(func=cmd_generate)

    q = sub.add_parser("check", help="decide whether a graph is angle-monotone")
    q.add_argument("--graph", required=True)
    q.add_argument("--width", type=float, default=90.0, help="wedge width in degrees")
    q.add_argument("--certify", type=int, nargs=2, metavar=("I", "J"))
    q.add_argument("--cert-out", help="certificate trace JSON written by --certify")
    q.add_argument("--oracle", action="store_true", help="exhaustive path search (small graphs only)")
    q.set_defaults(func=cmd_check)

    q = sub.add_parser("route", help="run the local router on a triangulation")
    q.add_argument("--graph", required=True)
    q.add_argument("--from", dest="src", type=int, required=True)
    q.add_argument("--to", dest="dst", type=int, required=True)
    q.add_argument("--trace")
    q.set_defaults(func=cmd_route)

    q = sub.add_parser("metrics", help="spanning ratio, routing ratio or largest angle")
    q.add_argument("--graph", required=True)
    q.add_argument("--metric", choices=("spanning-ratio", "routing-ratio", "max-angle"), default="spanning-ratio")
    q.add_argument("--all-pairs-csv")
    q.set_defaults(func=cmd_metrics)

    q = sub.add_parser("render", help="draw a graph with optional traces as SVG")
    q.add_argument("--graph", required=True)
    q.add_argument("--out", required=True)
    q.add_argument("--trace", action="append")
    q.add_argument("--marks")
    q.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"anglemono: error: {exc}", file=sys.stderr)
    except (AngleMonoError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"anglemono: error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
