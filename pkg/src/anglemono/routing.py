"""Local angle routing on triangulations.

At each vertex p the router looks at the rightmost triangle pab at p that
meets segment st, with a on p's side of line st.  It moves to a if a is
strictly closer to the line (a type-A step); otherwise it moves to whichever
of a, b makes the smaller absolute slope with st (type B).
"""
from __future__ import annotations

import math
from typing import Optional

from .errors import InvariantError
from .geometry import TAU_LEN, dist
from .graph import STEP_A, STEP_B, PathTrace, path_length
from .triangulation import SegmentFrame, Triangulation, rightmost_intersecting_triangle

_REL_TIE = 1e-12


class RoutingFrame:
    """Rotation carrying segment s->t onto the positive x axis with s at the origin."""

    def __init__(self, points, s: int, dst: int):
        self.points = points
        self.s = s
        self.dst = dst
        ps, pt = points[s], points[dst]
        self.length = dist(ps, pt)
        if self.length == 0.0:
            raise ValueError("source and destination coincide")
        self.rotation = math.atan2(pt.y - ps.y, pt.x - ps.x)
        self._c = (pt.x - ps.x) / self.length
        self._s = (pt.y - ps.y) / self.length

    def __call__(self, v: int) -> tuple[float, float]:
        q = self.points[v]
        ex, ey = q.x - self.points[self.s].x, q.y - self.points[self.s].y
        return ex * self._c + ey * self._s, ey * self._c - ex * self._s


def route(t: Triangulation, s: int, dst: int) -> PathTrace:
    if s == dst:
        raise ValueError("route needs distinct source and destination")
    n = t.n
    if not (0 <= s < n and 0 <= dst < n):
        raise ValueError("source or destination is not a vertex")
    seg = SegmentFrame(t.points, s, dst)
    scale = math.sqrt(seg.len2)
    budget = 3 * len(t.triangles)
    path = [s]
    seen = {s}
    steps: list[str] = []
    ties: list[bool] = []
    p = s
    while p != dst:
        if len(steps) >= budget:
            raise InvariantError(f"routing from {s} to {dst} exceeded {budget} steps")
        a, b, tie = rightmost_intersecting_triangle(t, p, s, dst, seg)
        xp, yp, _ = seg.xy(p)
        xa, ya, _ = seg.xy(a)
        if abs(ya) < abs(yp) - TAU_LEN * scale:
            nxt, kind = a, STEP_A
        else:
            xb, yb, _ = seg.xy(b)
            lhs = abs(ya - yp) * abs(xb - xp)
            rhs = abs(yb - yp) * abs(xa - xp)
            if lhs <= rhs:
                nxt, kind = a, STEP_B
            else:
                nxt, kind = b, STEP_B
            if abs(lhs - rhs) <= _REL_TIE * max(lhs, rhs):
                tie = True
        if nxt in seen:
            raise InvariantError(f"routing from {s} to {dst} revisited vertex {nxt}")
        seen.add(nxt)
        path.append(nxt)
        steps.append(kind)
        ties.append(tie)
        p = nxt
    pts = t.points
    rot = math.atan2(pts[dst].y - pts[s].y, pts[dst].x - pts[s].x)
    return PathTrace(tuple(path), tuple(steps), tuple(ties), meta={"frame_rotation": rot})


def frame_of(t: Triangulation, trace: PathTrace) -> RoutingFrame:
    return RoutingFrame(t.points, trace.source, trace.target)


def verify_x_increasing(trace: PathTrace, frame: RoutingFrame) -> bool:
    """Frame x never drops along the trace; a drop smaller than TAU_LEN counts as rounding."""
    xs = [frame(v)[0] for v in trace.vertices]
    return all(b - a > -TAU_LEN for a, b in zip(xs, xs[1:]))


def routing_ratio(trace: PathTrace, frame: RoutingFrame) -> float:
    pts = frame.points
    vs = trace.vertices
    length = math.fsum(dist(pts[u], pts[v]) for u, v in zip(vs, vs[1:]))
    return length / frame.length


def routing_ratio_bound(alpha: float) -> float:
    """Worst-case routing ratio on triangulations whose largest angle is alpha."""
    if not 0.0 < alpha < 2.0 * math.pi / 3.0:
        raise ValueError("alpha must lie in (0, 120 degrees)")
    return (math.sin(alpha) + math.sin(alpha / 2.0)) / math.sin(1.5 * alpha)


def routing_ratio_sweep(t: Triangulation, pairs=None) -> tuple[float, Optional[tuple[int, int]]]:
    """Largest routing ratio over ordered vertex pairs (all of them by default)."""
    used = [v for v in range(t.n) if t.rings[v]]
    if pairs is None:
        pairs = [(s, d) for s in used for d in used if s != d]
    best, arg = 1.0, None
    for s, d in pairs:
        tr = route(t, s, d)
        r = routing_ratio(tr, RoutingFrame(t.points, s, d))
        if arg is None or r > best:
            best, arg = r, (s, d)
    return best, arg


def step_a_budget_ok(trace: PathTrace, frame: RoutingFrame) -> bool:
    """At every prefix, |dy| spent on type-A steps is covered by |dy| from type-B steps."""
    ya_sum = yb_sum = 0.0
    vs = trace.vertices
    for (u, v), kind in zip(zip(vs, vs[1:]), trace.steps):
        dy = abs(frame(v)[1] - frame(u)[1])
        if kind == STEP_A:
            ya_sum += dy
        else:
            yb_sum += dy
        if ya_sum > yb_sum + TAU_LEN:
            return False
    return True


def b_steps_within_45(trace: PathTrace, frame: RoutingFrame) -> bool:
    vs = trace.vertices
    for (u, v), kind in zip(zip(vs, vs[1:]), trace.steps):
        if kind != STEP_B:
            continue
        (x0, y0), (x1, y1) = frame(u), frame(v)
        if abs(y1 - y0) > abs(x1 - x0) + TAU_LEN:
            return False
    return True


def trace_ratio(t: Triangulation, trace: PathTrace) -> float:
    return path_length(t.graph, trace) / dist(t.points[trace.source], t.points[trace.target])
