"""Plain-text point/graph/triangulation files and JSON traces.

Points file::

    n
    x y            (n lines)

Graph file: a points block, then ``edges m`` and m lines ``i j`` (i < j,
sorted, each pair once).  Triangulation files add ``triangles k`` with k CCW
lines ``i j k``.  Half-theta6 files may add ``cones c`` with lines
``i j owner cone``.  Coordinates are written with 17 significant digits so a
save/load round trip is bit-exact.
"""
from __future__ import annotations

import json
import math
import os
from typing import Optional, TextIO, Union

from .errors import FormatError
from .geometry import Point, dist
from .graph import GeometricGraph, PathTrace

Source = Union[str, os.PathLike, TextIO]


def fmt(x: float) -> str:
    return format(float(x), ".17g")


class _Lines:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        if self.lines and self.lines[-1] == "":
            self.lines.pop()
        self.i = 0

    def next(self, what: str) -> tuple[int, list[str]]:
        while self.i < len(self.lines):
            raw = self.lines[self.i]
            self.i += 1
            if raw.strip() and not raw.lstrip().startswith("#"):
                return self.i, raw.split()
        raise FormatError(self.i + 1, f"unexpected end of file, expected {what}")

    def peek_header(self) -> Optional[str]:
        j = self.i
        while j < len(self.lines):
            raw = self.lines[j]
            if raw.strip() and not raw.lstrip().startswith("#"):
                return raw.split()[0]
            j += 1
        return None


def _read(source: Source) -> str:
    if hasattr(source, "read"):
        return source.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _write(dest, text: str) -> None:
    if hasattr(dest, "write"):
        dest.write(text)
        return
    with open(dest, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(line, f"{what} must be an integer, got {tok!r}") from None


def _count(lines: _Lines, keyword: Optional[str]) -> int:
    ln, toks = lines.next(keyword or "point count")
    if keyword is None:
        if len(toks) != 1:
            raise FormatError(ln, "expected a single point count")
        k = _int(toks[0], ln, "point count")
    else:
        if len(toks) != 2 or toks[0] != keyword:
            raise FormatError(ln, f"expected '{keyword} <count>'")
        k = _int(toks[1], ln, f"{keyword} count")
    if k < 0:
        raise FormatError(ln, "negative count")
    return k


def _parse_points(lines: _Lines) -> list[Point]:
    n = _count(lines, None)
    pts = []
    seen = {}
    for _ in range(n):
        ln, toks = lines.next("a point line")
        if len(toks) != 2:
            raise FormatError(ln, "expected 'x y'")
        try:
            x, y = float(toks[0]), float(toks[1])
        except ValueError:
            raise FormatError(ln, f"bad coordinate in {' '.join(toks)!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise FormatError(ln, "non-finite coordinate")
        p = Point(x, y)
        if p in seen:
            raise FormatError(ln, f"duplicate point (same as vertex {seen[p]})")
        seen[p] = len(pts)
        pts.append(p)
    return pts


def _parse_edges(lines: _Lines, n: int) -> list[tuple[int, int]]:
    m = _count(lines, "edges")
    edges = []
    prev = None
    for _ in range(m):
        ln, toks = lines.next("an edge line")
        if len(toks) != 2:
            raise FormatError(ln, "expected 'i j'")
        i, j = _int(toks[0], ln, "vertex id"), _int(toks[1], ln, "vertex id")
        if i == j:
            raise FormatError(ln, f"self-loop at vertex {i}")
        if i > j:
            raise FormatError(ln, f"edge ({i}, {j}) must be written with i < j")
        if not (0 <= i < n and 0 <= j < n):
            raise FormatError(ln, f"edge ({i}, {j}) references a missing vertex")
        if prev is not None and (i, j) <= prev:
            raise FormatError(ln, "edges must be sorted with each pair listed once")
        prev = (i, j)
        edges.append((i, j))
    return edges


def _parse_triangles(lines: _Lines, n: int) -> list[tuple[int, int, int]]:
    k = _count(lines, "triangles")
    tris = []
    for _ in range(k):
        ln, toks = lines.next("a triangle line")
        if len(toks) != 3:
            raise FormatError(ln, "expected 'i j k'")
        t = tuple(_int(x, ln, "vertex id") for x in toks)
        if any(not 0 <= v < n for v in t) or len(set(t)) != 3:
            raise FormatError(ln, f"bad triangle {t}")
        tris.append(t)
    return tris


def _parse_cones(lines: _Lines, n: int) -> dict[tuple[int, int], tuple[int, int]]:
    k = _count(lines, "cones")
    out = {}
    for _ in range(k):
        ln, toks = lines.next("a cone line")
        if len(toks) != 4:
            raise FormatError(ln, "expected 'i j owner cone'")
        i, j, owner, cone = (_int(x, ln, "field") for x in toks)
        if owner not in (i, j) or not 0 <= cone < 6:
            raise FormatError(ln, "owner must be an endpoint and cone in 0..5")
        out[(min(i, j), max(i, j))] = (owner, cone)
    return out


def _expect_end(lines: _Lines) -> None:
    h = lines.peek_header()
    if h is not None:
        ln, toks = lines.next("end of file")
        raise FormatError(ln, f"unexpected content {' '.join(toks)!r}")


# ------------------------------------------------------------------ points

def loads_points(text: str) -> list[Point]:
    lines = _Lines(text)
    pts = _parse_points(lines)
    _expect_end(lines)
    return pts


def load_points(source: Source) -> list[Point]:
    return loads_points(_read(source))


def dumps_points(points) -> str:
    out = [str(len(points))]
    out += [f"{fmt(p[0])} {fmt(p[1])}" for p in points]
    return "\n".join(out) + "\n"


def save_points(points, dest) -> None:
    _write(dest, dumps_points(points))


# ------------------------------------------------------------------ graphs

def _check_cones(cones, edges, line_hint: int) -> None:
    es = set(edges)
    for e in cones:
        if e not in es:
            raise FormatError(line_hint, f"cone entry for non-edge {e}")


def loads_graph(text: str) -> GeometricGraph:
    return loads_any(text)[0]


def load_graph(source: Source) -> GeometricGraph:
    """Load a graph file; a trailing triangles or cones block is accepted and ignored here."""
    return loads_any(_read(source))[0]


def loads_any(text: str):
    """Parse any of the graph-family formats: (graph, triangles or None, cones or None)."""
    lines = _Lines(text)
    pts = _parse_points(lines)
    edges = _parse_edges(lines, len(pts))
    tris = cones = None
    while True:
        h = lines.peek_header()
        if h is None:
            break
        if h == "triangles" and tris is None:
            tris = _parse_triangles(lines, len(pts))
        elif h == "cones" and cones is None:
            cones = _parse_cones(lines, len(pts))
            _check_cones(cones, edges, lines.i)
        else:
            _expect_end(lines)
    return GeometricGraph(pts, edges), tris, cones


def dumps_graph(g: GeometricGraph, triangles=None, cones=None) -> str:
    out = [dumps_points(g.points).rstrip("\n")]
    edges = g.edges()
    out.append(f"edges {len(edges)}")
    out += [f"{i} {j}" for i, j in edges]
    if triangles is not None:
        out.append(f"triangles {len(triangles)}")
        out += [f"{a} {b} {c}" for a, b, c in triangles]
    if cones is not None:
        out.append(f"cones {len(cones)}")
        out += [f"{i} {j} {o} {c}" for (i, j), (o, c) in sorted(cones.items())]
    return "\n".join(out) + "\n"


def save_graph(g: GeometricGraph, dest, cones=None) -> None:
    _write(dest, dumps_graph(g, cones=cones))


def load_triangulation(source: Source):
    from .triangulation import Triangulation

    g, tris, _ = loads_any(_read(source))
    if tris is None:
        raise FormatError(0, "no triangles block")
    t = Triangulation(g.points, tris)
    if set(t.graph.edges()) != set(g.edges()):
        raise FormatError(0, "edge list does not match the triangles")
    return t


def save_triangulation(t, dest) -> None:
    _write(dest, dumps_graph(t.graph, triangles=t.triangles))


# ------------------------------------------------------------------ traces

def trace_dict(g: GeometricGraph, trace: PathTrace, frame_rotation: Optional[float] = None) -> dict:
    from .graph import path_length

    vs = list(trace.vertices)
    length = path_length(g, trace)
    d = dist(g.points[vs[0]], g.points[vs[-1]])
    out = {
        "source": vs[0],
        "target": vs[-1],
        "vertices": vs,
        "steps": list(trace.steps),
        "length": length,
        "ratio": length / d if d > 0 else 1.0,
    }
    if frame_rotation is not None:
        out["frame_rotation"] = frame_rotation
    out["tie_flags"] = list(trace.tie_flags)
    return out


def dumps_trace(g, trace, frame_rotation=None) -> str:
    return json.dumps(trace_dict(g, trace, frame_rotation), indent=2, sort_keys=False) + "\n"


def save_trace(g, trace, dest, frame_rotation=None) -> None:
    _write(dest, dumps_trace(g, trace, frame_rotation))


def load_trace(source: Source) -> PathTrace:
    try:
        d = json.loads(_read(source))
        return PathTrace(
            tuple(d["vertices"]),
            tuple(d.get("steps") or ()),
            tuple(bool(x) for x in d.get("tie_flags") or ()),
        )
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise FormatError(getattr(exc, "lineno", 0), f"bad trace file: {exc}") from None
