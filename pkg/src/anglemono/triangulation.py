"""Triangulations: Delaunay construction, Gabriel tests, and rightmost-triangle queries."""
from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from .errors import CocircularError, DegenerateInputError, InvariantError
from .geometry import (
    TAU_ANGLE,
    Point,
    as_points,
    in_diametral_disc,
    incircle,
    incircle_exact,
    orientation,
    triangle_angles,
)
from .graph import GeometricGraph

BOUNDARY = -1


class Triangulation:
    """Triangles over a point set, with edge, adjacency and vertex-ring lookups.

    Triangles may be given in either orientation; they are stored counter-clockwise.
    The union need not be convex (several fixtures are triangulated polygons).
    """

    def __init__(self, points: Sequence, triangles: Sequence[Sequence[int]]):
        pts = as_points(points)
        tris = []
        for tri in triangles:
            a, b, c = (int(v) for v in tri)
            o = orientation(pts[a], pts[b], pts[c])
            if o == 0:
                raise DegenerateInputError(f"degenerate triangle ({a}, {b}, {c})")
            tris.append((a, b, c) if o > 0 else (a, c, b))
        if not tris:
            raise DegenerateInputError("a triangulation needs at least one triangle")
        self.triangles: tuple[tuple[int, int, int], ...] = tuple(tris)
        self.edge_tri: dict[tuple[int, int], int] = {}
        for k, (a, b, c) in enumerate(tris):
            for e in ((a, b), (b, c), (c, a)):
                if e in self.edge_tri:
                    raise DegenerateInputError(f"directed edge {e} is shared by two triangles")
                self.edge_tri[e] = k
        edges = {(min(u, v), max(u, v)) for u, v in self.edge_tri}
        self.graph = GeometricGraph(pts, sorted(edges))
        self.neighbors: tuple[tuple[int, int, int], ...] = tuple(
            tuple(self.edge_tri.get((v, u), BOUNDARY) for u, v in ((a, b), (b, c), (c, a)))
            for a, b, c in tris
        )
        rings: list[list[int]] = [[] for _ in pts]
        for k, tri in enumerate(tris):
            for v in tri:
                rings[v].append(k)
        self.rings: tuple[tuple[int, ...], ...] = tuple(
            tuple(self._cw_order(v, r)) for v, r in enumerate(rings)
        )

    def _cw_order(self, v: int, ring: list[int]) -> list[int]:
        p = self.points[v]

        def key(k):
            a, b, c = (self.points[w] for w in self.triangles[k])
            cx, cy = (a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0
            return -math.atan2(cy - p.y, cx - p.x)

        return sorted(ring, key=key)

    @property
    def points(self) -> tuple[Point, ...]:
        return self.graph.points

    @property
    def n(self) -> int:
        return self.graph.n

    def third_vertex(self, k: int, u: int, v: int) -> int:
        (w,) = set(self.triangles[k]) - {u, v}
        return w

    def internal_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for (u, v) in self.edge_tri if u < v and (v, u) in self.edge_tri]

    def __repr__(self) -> str:
        return f"Triangulation(n={self.n}, triangles={len(self.triangles)})"


# ---------------------------------------------------------------- Delaunay

def delaunay(points: Sequence) -> Triangulation:
    """Delaunay triangulation by a lexicographic sweep with exact incircle flips."""
    pts = as_points(points)
    n = len(pts)
    if n < 3:
        raise DegenerateInputError("delaunay needs at least 3 points")
    order = sorted(range(n), key=lambda i: (pts[i].x, pts[i].y))
    for a, b in zip(order, order[1:]):
        if pts[a] == pts[b]:
            raise DegenerateInputError(f"duplicate point at ids {a} and {b}")
    p0, p1 = order[0], order[1]
    k = 2
    while k < n and orientation(pts[p0], pts[p1], pts[order[k]]) == 0:
        k += 1
    if k == n:
        raise DegenerateInputError("all input points are collinear")

    tris: dict[int, tuple[int, int, int]] = {}
    edge_tri: dict[tuple[int, int], int] = {}
    next_id = [0]

    def add(a, b, c):
        tid = next_id[0]
        next_id[0] += 1
        tris[tid] = (a, b, c)
        edge_tri[(a, b)] = tid
        edge_tri[(b, c)] = tid
        edge_tri[(c, a)] = tid
        return tid

    def remove(tid):
        a, b, c = tris.pop(tid)
        for e in ((a, b), (b, c), (c, a)):
            del edge_tri[e]

    def legalize(a, b):
        # edge a->b belongs to a fresh triangle; flip while the far apex is inside its circle
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            t1 = edge_tri.get((a, b))
            t2 = edge_tri.get((b, a))
            if t1 is None or t2 is None:
                continue
            c = _apex(tris[t1], a, b)
            d = _apex(tris[t2], b, a)
            if incircle(pts[a], pts[b], pts[c], pts[d]) > 0:
                remove(t1)
                remove(t2)
                add(a, d, c)
                add(d, b, c)
                stack.append((a, d))
                stack.append((d, b))

    line = order[:k]
    apex = order[k]
    left = orientation(pts[line[0]], pts[line[-1]], pts[apex]) > 0
    for u, v in zip(line, line[1:]):
        if left:
            add(u, v, apex)
        else:
            add(v, u, apex)
    # fan triangles over collinear points are already Delaunay
    hull = line + [apex] if left else [line[0], apex] + line[:0:-1]

    for q in order[k + 1:]:
        h = len(hull)
        vis = [orientation(pts[hull[i]], pts[hull[(i + 1) % h]], pts[q]) < 0 for i in range(h)]
        if not any(vis):
            raise InvariantError("sweep point sees no hull edge")
        # rotate so the visible run is contiguous starting at index 0
        start = next(i for i in range(h) if vis[i] and not vis[i - 1])
        hull = hull[start:] + hull[:start]
        vis = vis[start:] + vis[:start]
        run = 0
        while run < h and vis[run]:
            run += 1
        new_edges = []
        for i in range(run):
            u, v = hull[i], hull[(i + 1) % h]
            add(v, u, q)
            new_edges.append((v, u))
        hull = [hull[0], q] + hull[run:]
        for u, v in new_edges:
            legalize(u, v)

    out = Triangulation(pts, list(tris.values()))
    for u, v in out.internal_edges():
        c = _apex(out.triangles[out.edge_tri[(u, v)]], u, v)
        d = _apex(out.triangles[out.edge_tri[(v, u)]], v, u)
        s = incircle(pts[u], pts[v], pts[c], pts[d])
        if s == 0:
            raise CocircularError(sorted((u, v, c, d)))
        if s > 0:
            raise InvariantError(f"edge ({u}, {v}) left non-Delaunay")
    return out


def _apex(tri, a, b) -> int:
    for w in tri:
        if w != a and w != b:
            return w
    raise InvariantError("triangle has no apex")


def empty_circumdisc_violations(t: Triangulation, limit: Optional[int] = None) -> list[tuple[int, int]]:
    """(triangle, point) pairs where the point is strictly inside the triangle's circumdisc."""
    xs, ys = t.graph.xs, t.graph.ys
    pts = t.points
    bad = []
    for k, (a, b, c) in enumerate(t.triangles):
        adx, ady = xs[a] - xs, ys[a] - ys
        bdx, bdy = xs[b] - xs, ys[b] - ys
        cdx, cdy = xs[c] - xs, ys[c] - ys
        al, bl, cl = adx * adx + ady * ady, bdx * bdx + bdy * bdy, cdx * cdx + cdy * cdy
        det = al * (bdx * cdy - cdx * bdy) + bl * (cdx * ady - adx * cdy) + cl * (adx * bdy - bdx * ady)
        perm = (
            al * (np.abs(bdx * cdy) + np.abs(cdx * bdy))
            + bl * (np.abs(cdx * ady) + np.abs(adx * cdy))
            + cl * (np.abs(adx * bdy) + np.abs(bdx * ady))
        )
        unsure = np.abs(det) <= 1e-14 * perm
        hits = set(np.nonzero((det > 0) & ~unsure)[0].tolist())
        for d in np.nonzero(unsure)[0].tolist():
            if incircle_exact(pts[a], pts[b], pts[c], pts[d]) > 0:
                hits.add(d)
        hits -= {a, b, c}
        bad += [(k, d) for d in sorted(hits)]
        if limit is not None and len(bad) >= limit:
            break
    return bad


def is_delaunay(t: Triangulation) -> bool:
    return not empty_circumdisc_violations(t, limit=1)


# ---------------------------------------------------------------- angles and Gabriel

def max_angle(t: Triangulation) -> float:
    pts = t.points
    return max(max(triangle_angles(pts[a], pts[b], pts[c])) for a, b, c in t.triangles)


def is_gabriel(t: Triangulation) -> bool:
    return max_angle(t) <= math.pi / 2 + TAU_ANGLE


def gabriel_graph(points: Sequence) -> GeometricGraph:
    """Edges whose open diametral disc holds no other input point."""
    pts = as_points(points)
    n = len(pts)
    g0 = GeometricGraph(pts)  # rejects duplicates
    try:
        cands = delaunay(pts).graph.edges() if n >= 3 else [(0, 1)] if n == 2 else []
    except DegenerateInputError:
        cands = [(i, j) for i in range(n) for j in range(i + 1, n)]
    xs, ys = g0.xs, g0.ys
    keep = []
    for u, v in cands:
        t1 = (xs[u] - xs) * (xs[v] - xs)
        t2 = (ys[u] - ys) * (ys[v] - ys)
        dot = t1 + t2
        bound = 1e-15 * (np.abs(t1) + np.abs(t2))
        dot[[u, v]] = 1.0
        if np.any(dot < -bound):
            continue
        unsure = np.nonzero(np.abs(dot) <= bound)[0]
        if any(in_diametral_disc(pts[u], pts[v], pts[p]) for p in unsure if p not in (u, v)):
            continue
        keep.append((u, v))
    return GeometricGraph(pts, keep)


# ---------------------------------------------------------------- routing support

class SegmentFrame:
    """Coordinates along segment s->t: X = (q-s).(t-s), Y = (t-s)x(q-s); sign(Y) is exact."""

    def __init__(self, points: Sequence[Point], s: int, dst: int):
        self.points = points
        self.s = points[s]
        self.t = points[dst]
        self.dx = self.t.x - self.s.x
        self.dy = self.t.y - self.s.y
        self.len2 = self.dx * self.dx + self.dy * self.dy
        self._cache: dict[int, tuple[float, float, int]] = {}

    def xy(self, v: int) -> tuple[float, float, int]:
        r = self._cache.get(v)
        if r is None:
            q = self.points[v]
            ex, ey = q.x - self.s.x, q.y - self.s.y
            side = orientation(self.s, self.t, q)
            y = self.dx * ey - self.dy * ex
            if side == 0:
                y = 0.0
            elif (y > 0) != (side > 0) or y == 0.0:
                y = math.copysign(max(abs(y), 5e-324), side)
            r = (self.dx * ex + self.dy * ey, y, side)
            self._cache[v] = r
        return r


def _segment_reach(frame: SegmentFrame, tri) -> Optional[tuple[float, float]]:
    """Closed interval of X where the closed triangle meets line st, clipped to [0, |st|^2]."""
    vals = [frame.xy(v) for v in tri]
    xs = []
    for i in range(3):
        xa, ya, sa = vals[i]
        xb, yb, sb = vals[(i + 1) % 3]
        if sa == 0:
            xs.append(xa)
        if sa * sb < 0:
            xs.append(xa + (xb - xa) * ya / (ya - yb))
    if not xs:
        return None
    lo = max(min(xs), 0.0)
    hi = min(max(xs), frame.len2)
    if hi < lo:
        return None
    return lo, hi


def rightmost_intersecting_triangle(
    t: Triangulation, p: int, s: int, dst: int, frame: Optional[SegmentFrame] = None
) -> tuple[int, int, bool]:
    """Rightmost triangle at p meeting segment s-dst; returns (a, b, tie_flag).

    a shares p's side of line s-dst (above when p is on the line). Only triangles
    that meet the segment in a piece of positive length are candidates.
    """
    if p == dst:
        raise ValueError("p must differ from the destination")
    if frame is None:
        frame = SegmentFrame(t.points, s, dst)
    best = None
    for k in t.rings[p]:
        reach = _segment_reach(frame, t.triangles[k])
        if reach is None or reach[1] <= reach[0]:
            continue
        far = reach[1]
        above = any(frame.xy(v)[2] > 0 for v in t.triangles[k] if v != p)
        cand = (far, above, k)
        if best is None:
            best = cand
            tie = False
            continue
        slack = 1e-12 * frame.len2
        if far > best[0] + slack:
            best, tie = cand, False
        elif far >= best[0] - slack:
            tie = True
            if above and not best[1]:
                best = cand
    if best is None:
        # st leaves the triangulated region here (non-convex union or a nearly flat hull)
        raise DegenerateInputError(f"no triangle at vertex {p} meets segment ({s}, {dst})")
    k = best[2]
    a0, b0, c0 = t.triangles[k]
    i = (a0, b0, c0).index(p)
    u, w = t.triangles[k][(i + 1) % 3], t.triangles[k][(i + 2) % 3]
    if frame.xy(p)[2] >= 0:
        return w, u, tie
    return u, w, tie
