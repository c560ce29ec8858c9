"""Half-theta6 graphs and their width-120 angle-monotone paths.

Cones are 60 degrees wide and labelled clockwise starting with C0, the cone
around the +y axis: C1 = (0, 60), C0 = (60, 120), C5 = (120, 180),
C4 = (180, 240), C3 = (240, 300), C2 = (300, 360) degrees.  Each vertex keeps
one edge per even cone, to the member whose projection on the cone bisector
is smallest (its canonical triangle is empty).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import GeneralPositionError, InvariantError
from .geometry import as_points, sign_sqrt3
from .graph import GeometricGraph, PathTrace

EVEN_CONES = (0, 2, 4)


def _exact_delta(p, q):
    return Fraction(q[0]) - Fraction(p[0]), Fraction(q[1]) - Fraction(p[1])


def cone_index_exact(u, v, ids=None) -> int:
    """Cone of v as seen from u, decided with exact arithmetic."""
    dx, dy = _exact_delta(u, v)
    if dx == 0 and dy == 0:
        raise GeneralPositionError(*(ids or (u, v)), msg="coincident points")
    s0 = (dy > 0) - (dy < 0)
    s60 = sign_sqrt3(dy, -dx)  # > 0: direction lies ccw of the 60 degree line
    s120 = sign_sqrt3(-dy, -dx)  # > 0: direction lies ccw of the 120 degree line
    if s0 == 0 or s60 == 0 or s120 == 0:
        raise GeneralPositionError(*(ids or (u, v)))
    if s0 > 0:
        sector = 0 if s60 < 0 else (1 if s120 < 0 else 2)
    else:
        sector = 3 if s60 > 0 else (4 if s120 > 0 else 5)
    return (1 - sector) % 6


def cone_index(u, v) -> int:
    dx, dy = v[0] - u[0], v[1] - u[1]
    if dx == 0.0 and dy == 0.0:
        raise GeneralPositionError(u, v, msg="coincident points")
    theta = math.atan2(dy, dx) % (2.0 * math.pi)
    q = theta / (math.pi / 3.0)
    frac = q - math.floor(q)
    if min(frac, 1.0 - frac) * (math.pi / 3.0) < _kernels.NEAR_ANGLE:
        return cone_index_exact(u, v)
    return (1 - int(math.floor(q)) % 6) % 6


def _proj_cmp(c: int, v, w) -> int:
    """Exact sign of proj_c(v) - proj_c(w) on the bisector of cone c."""
    dx, dy = _exact_delta(w, v)
    if c == 0:
        return (dy > 0) - (dy < 0)
    if c == 2:  # bisector (sqrt3/2, -1/2)
        return sign_sqrt3(-dy, dx)
    if c == 4:  # bisector (-sqrt3/2, -1/2)
        return sign_sqrt3(-dy, -dx)
    raise ValueError("only even cones carry edges")


class HalfThetaGraph(GeometricGraph):
    """A half-theta6 graph that remembers its cone tables."""

    def __init__(self, points, cone: np.ndarray, nbr: np.ndarray):
        self.cone = cone
        self.cone_nbr = nbr
        edges = set()
        self.attribution: dict[tuple[int, int], tuple[int, int]] = {}
        for u in range(len(points)):
            for c in EVEN_CONES:
                v = int(nbr[u, c])
                if v >= 0:
                    e = (min(u, v), max(u, v))
                    edges.add(e)
                    self.attribution[e] = (u, c)
        super().__init__(points, sorted(edges))
        self._chains: dict[tuple[int, int], tuple[tuple[int, ...], dict[int, int]]] = {}

    def cone_of(self, u: int, v: int) -> int:
        return int(self.cone[u, v])

    def chain(self, u: int, c: int) -> tuple[int, ...]:
        return self._chain(u, c)[0]

    def _chain(self, u: int, c: int):
        hit = self._chains.get((u, c))
        if hit is None:
            out = [u]
            w = int(self.cone_nbr[u, c])
            while w >= 0:
                out.append(w)
                w = int(self.cone_nbr[w, c])
            seq = tuple(out)
            hit = (seq, {w: i for i, w in enumerate(seq)})
            self._chains[(u, c)] = hit
        return hit

    def proj_le(self, c: int, w: int, v: int) -> bool:
        """proj_c(w) <= proj_c(v), exact when the float values are close."""
        b = _kernels.BISECTOR[c]
        bx, by = math.cos(b), math.sin(b)
        pw, pv = self.points[w], self.points[v]
        d = (pw.x - pv.x) * bx + (pw.y - pv.y) * by
        if abs(d) > 1e-12 * (abs(pw.x) + abs(pw.y) + abs(pv.x) + abs(pv.y) + 1.0):
            return d < 0
        return _proj_cmp(c, pw, pv) <= 0


def build_half_theta6(points: Sequence, backend: str | None = None) -> HalfThetaGraph:
    pts = as_points(points)
    GeometricGraph(pts)  # duplicate check
    n = len(pts)
    xs = np.array([p.x for p in pts])
    ys = np.array([p.y for p in pts])
    cone, near = _kernels.cone_table(xs, ys, backend)
    cone = np.array(cone, dtype=np.int8)
    for u, v in zip(*np.nonzero(near)):
        cone[u, v] = cone_index_exact(pts[u], pts[v], ids=(int(u), int(v)))
    nbr, tie = _kernels.cone_argmin(xs, ys, cone, backend)
    nbr = np.array(nbr, dtype=np.int64)
    for u, c in zip(*np.nonzero(tie)):
        u, c = int(u), int(c)
        if c % 2:
            continue
        members = [int(v) for v in np.nonzero(cone[u] == c)[0]]
        best = members[0]
        for v in members[1:]:
            s = _proj_cmp(c, pts[v], pts[best])
            if s == 0:
                raise GeneralPositionError(v, best, msg="pair lies on a line parallel to a cone boundary")
            if s < 0:
                best = v
        nbr[u, c] = best
    nbr[:, 1::2] = -1
    if n == 1:
        nbr[:] = -1
    return HalfThetaGraph(pts, cone, nbr)


def c0_chain(g: HalfThetaGraph, u: int) -> PathTrace:
    return PathTrace(g.chain(u, 0))


def c4_chain(g: HalfThetaGraph, v: int) -> PathTrace:
    return PathTrace(g.chain(v, 4))


def c2_chain(g: HalfThetaGraph, v: int) -> PathTrace:
    return PathTrace(g.chain(v, 2))


def angle_monotone_path_120(g: HalfThetaGraph, u: int, v: int) -> PathTrace:
    """A u->v path whose edge directions fit in a closed 120 degree wedge."""
    return PathTrace(path_120_vertices(g, u, v))


def path_120_vertices(g: HalfThetaGraph, u: int, v: int) -> tuple[int, ...]:
    if u == v:
        raise ValueError("endpoints must differ")
    r = int(g.cone[u, v])
    if r % 2:
        return path_120_vertices(g, v, u)[::-1]
    su, pos_u = g._chain(u, r)
    iv = pos_u.get(v)
    if iv is not None:
        return su[: iv + 1]
    # last chain vertex inside the canonical triangle of v
    k = 0
    while k + 1 < len(su) and g.proj_le(r, su[k + 1], v):
        k += 1
    side = (int(g.cone[su[k], v]) - r) % 6
    if side == 1:
        c = (4 + r) % 6
    elif side == 5:
        c = (2 + r) % 6
    else:
        raise InvariantError(f"vertex {v} in unexpected cone {side} of chain vertex {su[k]}")
    sv, _ = g._chain(v, c)
    for j, x in enumerate(sv):
        i = pos_u.get(x)
        if i is not None:
            return su[: i + 1] + sv[:j][::-1]
    raise InvariantError(f"chains from {u} and {v} never meet")
