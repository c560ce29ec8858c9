"""Geometric graphs, vertex paths, and the path checkers used as certificates."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DegenerateInputError, PathError
from .geometry import (
    TAU_ANGLE,
    TAU_LEN,
    Point,
    as_points,
    ccw_span,
    dist,
    edge_angle,
    in_diametral_disc,
    min_enclosing_wedge,
)

STEP_A = "A"
STEP_B = "B"


class GeometricGraph:
    """Points (vertex id = index) plus undirected straight-line edges."""

    def __init__(self, points: Sequence, edges: Iterable[tuple[int, int]] = ()):
        pts = [p if isinstance(p, Point) else Point(*map(float, p)) for p in points]
        pts = as_points(pts)
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise DegenerateInputError(f"duplicate point {tuple(p)} at ids {seen[p]} and {i}")
            seen[p] = i
        self.points: tuple[Point, ...] = tuple(pts)
        n = len(pts)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise DegenerateInputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DegenerateInputError(f"edge ({u}, {v}) references a missing vertex")
            adj[u].add(v)
            adj[v].add(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._adjsets = [frozenset(a) for a in adj]
        self.xs = np.array([p.x for p in pts], dtype=np.float64)
        self.ys = np.array([p.y for p in pts], dtype=np.float64)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "GeometricGraph":
        return GeometricGraph(self.points, self.edges() + list(extra))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeometricGraph)
            and self.points == other.points
            and self.adjacency == other.adjacency
        )

    def __repr__(self) -> str:
        return f"GeometricGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PathTrace:
    """A simple vertex path with an optional step tag and tie flag per edge."""

    vertices: tuple[int, ...]
    steps: tuple[Optional[str], ...] = ()
    tie_flags: tuple[bool, ...] = ()
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        ne = max(len(self.vertices) - 1, 0)
        if not self.steps:
            object.__setattr__(self, "steps", (None,) * ne)
        if not self.tie_flags:
            object.__setattr__(self, "tie_flags", (False,) * ne)
        if len(self.steps) != ne or len(self.tie_flags) != ne:
            raise PathError("per-edge annotations do not match the number of edges")

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    @property
    def num_edges(self) -> int:
        return len(self.vertices) - 1

    def reversed(self) -> "PathTrace":
        return PathTrace(self.vertices[::-1], self.steps[::-1], self.tie_flags[::-1])


def as_trace(p) -> PathTrace:
    return p if isinstance(p, PathTrace) else PathTrace(tuple(p))


def validate_path(g: GeometricGraph, p) -> PathTrace:
    p = as_trace(p)
    if not p.vertices:
        raise PathError("empty path")
    if len(set(p.vertices)) != len(p.vertices):
        raise PathError(f"path repeats a vertex: {p.vertices}")
    for v in p.vertices:
        if not 0 <= v < g.n:
            raise PathError(f"vertex {v} is not in the graph")
    for u, v in zip(p.vertices, p.vertices[1:]):
        if not g.has_edge(u, v):
            raise PathError(f"({u}, {v}) is not an edge")
    return p


def path_length(g: GeometricGraph, p) -> float:
    p = validate_path(g, p)
    pts = g.points
    return math.fsum(dist(pts[u], pts[v]) for u, v in zip(p.vertices, p.vertices[1:]))


def path_angles(g: GeometricGraph, p) -> list[float]:
    vs = as_trace(p).vertices
    return [edge_angle(g.points[u], g.points[v]) for u, v in zip(vs, vs[1:])]


def path_width(g: GeometricGraph, p) -> tuple[float, float]:
    """(beta, width) of the narrowest wedge holding every edge direction."""
    p = validate_path(g, p)
    if p.num_edges < 1:
        raise PathError("path_width needs at least one edge")
    return min_enclosing_wedge(path_angles(g, p))


def is_angle_monotone_path(g: GeometricGraph, p, gamma: float) -> bool:
    return path_width(g, p)[1] <= gamma + TAU_ANGLE


def is_self_approaching(g: GeometricGraph, p) -> bool:
    """Vertex-level check of the self-approaching condition on a polygonal path."""
    p = validate_path(g, p)
    if p.num_edges < 1:
        raise PathError("is_self_approaching needs at least one edge")
    pts = [g.points[v] for v in p.vertices]
    k = len(pts)
    for i in range(k - 1):
        a0, a1 = pts[i], pts[i + 1]
        dx, dy = a1.x - a0.x, a1.y - a0.y
        slack = -TAU_LEN * math.hypot(dx, dy)
        for r in pts[i + 1:]:
            for a in (a0, a1):
                if dx * (r.x - a.x) + dy * (r.y - a.y) < slack:
                    return False
    return True


def in_diametral_disc_path(g: GeometricGraph, p) -> bool:
    """Every vertex of p lies in the closed disc with diameter on p's endpoints."""
    vs = as_trace(p).vertices
    if len(vs) < 2:
        return True
    u, v = g.points[vs[0]], g.points[vs[-1]]
    cx, cy = (u.x + v.x) / 2.0, (u.y + v.y) / 2.0
    r = dist(u, v) / 2.0
    for w in vs[1:-1]:
        q = g.points[w]
        if in_diametral_disc(u, v, q, closed=True):
            continue
        if math.hypot(q.x - cx, q.y - cy) > r + TAU_LEN:
            return False
    return True


def reversal_preserves_width(g: GeometricGraph, p) -> bool:
    """Reversed path has the same width and a bisector turned by pi."""
    b1, w1 = path_width(g, p)
    b2, w2 = path_width(g, as_trace(p).reversed())
    if abs(w1 - w2) > TAU_ANGLE:
        return False
    d = ccw_span(b1, b2)
    return abs(d - math.pi) <= TAU_ANGLE


def crossing_pairs(g: GeometricGraph, backend: Optional[str] = None) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Edge pairs whose interiors cross; the batch filter's unsure pairs are settled exactly."""
    from . import _kernels
    from .geometry import segments_properly_cross

    edges = g.edges()
    if len(edges) < 2:
        return []
    sure, unsure = _kernels.crossings(g.xs, g.ys, edges, backend)
    out = [(edges[i], edges[j]) for i, j in sure.tolist()]
    pts = g.points
    for i, j in unsure.tolist():
        (a, b), (c, d) = edges[i], edges[j]
        if segments_properly_cross(pts[a], pts[b], pts[c], pts[d]):
            out.append((edges[i], edges[j]))
    return sorted(out)
