"""Point sets and triangulations for tests, benchmarks and worst-case gadgets.

Every generator checks its own output (Gabriel property, angle bound, empty
circumdiscs, target ratio) and raises GeneratorError instead of returning a
bad instance.  Randomness comes from numpy's PCG64 generator seeded explicitly.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import GeneralPositionError, GeneratorError
from .geometry import Point, as_points, dist, orientation, orientation_exact
from .graph import GeometricGraph
from .halftheta import cone_index_exact
from .triangulation import Triangulation, delaunay, is_delaunay, is_gabriel, max_angle

JITTER = 1e-9


@dataclass
class Gadget:
    """A triangulation with named vertices (s, t and construction-specific marks)."""

    triangulation: Triangulation
    marks: dict[str, int] = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    @property
    def s(self) -> int:
        return self.marks["s"]

    @property
    def t(self) -> int:
        return self.marks["t"]

    @property
    def points(self):
        return self.triangulation.points


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# ---------------------------------------------------------------- random inputs

def general_position_offenders(points) -> set[int]:
    """Vertices involved in a cone-boundary pair, a collinear triple or a cocircular quadruple."""
    pts = as_points(points)
    n = len(pts)
    xs = np.array([p.x for p in pts])
    ys = np.array([p.y for p in pts])
    bad: set[int] = set()
    _, near = _kernels.cone_table(xs, ys)
    for u, v in zip(*np.nonzero(near)):
        try:
            cone_index_exact(pts[u], pts[v])
        except GeneralPositionError:
            bad.update((int(u), int(v)))
    for i in range(n):
        for j in range(i + 1, n):
            ks = np.arange(j + 1, n)
            d1 = (xs[i] - xs[ks]) * (ys[j] - ys[ks])
            d2 = (ys[i] - ys[ks]) * (xs[j] - xs[ks])
            det = d1 - d2
            unsure = np.abs(det) <= 1e-15 * (np.abs(d1) + np.abs(d2))
            for k in ks[unsure]:
                if orientation_exact(pts[i], pts[j], pts[int(k)]) == 0:
                    bad.update((i, j, int(k)))
    if n >= 4 and not bad:
        try:
            delaunay(pts)
        except GeneralPositionError:
            pass
        except Exception as exc:  # cocircular quadruple
            ids = getattr(exc, "ids", None)
            if ids:
                bad.update(ids)
    return bad


def gen_random(n: int, seed: int = 0) -> list[Point]:
    """n points uniform in the unit square, jittered and resampled into general position."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = rng_for(seed)
    arr = rng.random((n, 2)) + rng.uniform(-JITTER, JITTER, (n, 2))
    for _ in range(100):
        pts = as_points(arr)
        bad = general_position_offenders(pts) if len(set(pts)) == n else set(range(n))
        if not bad:
            return pts
        for i in sorted(bad):
            arr[i] = rng.random(2)
    raise GeneratorError("could not reach general position")


def gen_random_graph(n: int, p: float, seed: int = 0) -> GeometricGraph:
    """Random points with each pair joined independently with probability p."""
    rng = rng_for(seed)
    pts = gen_random(n, seed)
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]
    return GeometricGraph(pts, edges)


# ---------------------------------------------------------------- regular fixtures

def gen_grid_gabriel(m: int) -> Triangulation:
    """m x m unit cells, each cut by its rising diagonal into two right isoceles triangles."""
    if m < 1:
        raise ValueError("m must be positive")

    def idx(i, j):
        return j * (m + 1) + i

    pts = [(float(i), float(j)) for j in range(m + 1) for i in range(m + 1)]
    tris = []
    for j in range(m):
        for i in range(m):
            tris.append((idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)))
            tris.append((idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)))
    t = Triangulation(pts, tris)
    if not is_gabriel(t):
        raise GeneratorError("grid is not Gabriel")
    return t


def gen_lattice(rows: int, cols: int, shear: float = 0.0, stretch: float = 1.0,
                jitter: float = 0.0, seed: int = 0) -> Triangulation:
    """Triangular lattice with fixed connectivity, optionally sheared, stretched and jittered.

    The connectivity does not depend on the coordinates, so the result is a
    triangulation of its point set but not necessarily a Delaunay one.
    """
    rng = rng_for(seed)
    pts = []
    for j in range(rows + 1):
        for i in range(cols + 1):
            x = i + 0.5 * j + shear * j
            y = j * math.sqrt(3.0) / 2.0 * stretch
            pts.append((x, y))
    arr = np.array(pts) + rng.uniform(-jitter, jitter, (len(pts), 2))

    def idx(i, j):
        return j * (cols + 1) + i

    tris = []
    for j in range(rows):
        for i in range(cols):
            tris.append((idx(i, j), idx(i + 1, j), idx(i, j + 1)))
            tris.append((idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)))
    return Triangulation(arr, tris)


def gen_regular_ngon(n: int, seed: int = 0) -> list[Point]:
    """Vertices of a regular n-gon on the unit circle, rotated by a tiny seeded phase."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = rng_for(seed)
    for _ in range(100):
        phase = rng.uniform(1e-4, 1e-3)
        pts = as_points(
            (math.cos(2 * math.pi * i / n + phase), math.sin(2 * math.pi * i / n + phase)) for i in range(n)
        )
        try:
            for u, v in combinations(range(n), 2):
                cone_index_exact(pts[u], pts[v])
        except GeneralPositionError:
            continue
        if n >= 4:
            warnings.warn(f"the {n}-gon is cocircular and unsuitable for delaunay()", stacklevel=2)
        return pts
    raise GeneratorError("no phase avoided the cone boundaries")


# ---------------------------------------------------------------- routing worst cases

def _polar(r: float, a: float) -> tuple[float, float]:
    return r * math.cos(a), r * math.sin(a)


def _two_triangle_gadget(alpha: float, e: float):
    """Source s, far vertex a, tiny vertex b below s, target t = (1, 0).

    From s the route climbs to a at angle alpha/2 - e, then drops to t.  The
    tiny vertex b makes (s, a, b) and (a, b, t) a triangulation with largest
    angle alpha.
    """
    beta = e
    ang_a = alpha / 2.0 - e
    ang_b = -(alpha / 2.0) - e
    b = _polar(beta, ang_b)
    # t sees b slightly below the axis; keep the angle at t at most alpha
    delta_b = math.atan2(-b[1], 1.0 - b[0])
    theta = alpha - 2.0 * delta_b  # angle at t between t->s and t->a
    # a = intersection of the ray from s at ang_a with the ray from t at pi - theta
    apex = math.pi - ang_a - theta
    la = math.sin(theta) / math.sin(apex)
    a = _polar(la, ang_a)
    pts = [(0.0, 0.0), (1.0, 0.0), a, b]
    tris = [(0, 3, 2), (2, 3, 1)]
    return pts, tris


def gen_gabriel_worstcase(eps: float) -> Gadget:
    """Gabriel triangulation whose s->t route tends to 1 + sqrt(2) as eps shrinks."""
    if not 0.0 < eps < 0.1:
        raise ValueError("eps must lie in (0, 0.1)")
    g = _worstcase(math.pi / 2.0, eps)
    if not is_gabriel(g.triangulation):
        raise GeneratorError("worst-case gadget is not Gabriel")
    return g


def gen_general_worstcase(alpha: float, eps: float) -> Gadget:
    """Triangulation with largest angle alpha whose route approaches the alpha bound."""
    if not math.pi / 2.0 - 1e-12 <= alpha < 2.0 * math.pi / 3.0:
        raise ValueError("alpha must lie in [90, 120) degrees")
    if not 0.0 < eps < 0.1:
        raise ValueError("eps must lie in (0, 0.1)")
    return _worstcase(alpha, eps)


def _worstcase(alpha: float, eps: float) -> Gadget:
    from .routing import RoutingFrame, route, routing_ratio, routing_ratio_bound

    target = (1.0 - eps) * routing_ratio_bound(alpha)
    e = eps / 4.0
    # the ratio loss grows as sin(3 alpha / 2) shrinks, so tighten until the target is met
    for _ in range(30):
        pts, tris = _two_triangle_gadget(alpha, e)
        t = Triangulation(pts, tris)
        if max_angle(t) > alpha + 1e-9:
            raise GeneratorError(f"largest angle {math.degrees(max_angle(t))} exceeds alpha")
        tr = route(t, 0, 1)
        ratio = routing_ratio(tr, RoutingFrame(t.points, 0, 1))
        if ratio >= target:
            break
        e /= 4.0
    else:
        raise GeneratorError(f"route ratio {ratio} misses target {target}")
    return Gadget(t, {"s": 0, "t": 1, "a": 2, "b": 3}, {"alpha": alpha, "eps": eps, "ratio": ratio})


# ---------------------------------------------------------------- Delaunay lower bound

def _circumcenter(a, b, c) -> tuple[float, float]:
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    return ux, uy


def _chord_end(p, slope: float, c, r: float) -> tuple[float, float]:
    """Second point where the line through p (on the circle (c, r)) with this slope meets the circle."""
    n = math.hypot(1.0, slope)
    dx, dy = 1.0 / n, slope / n
    ex, ey = p[0] - c[0], p[1] - c[1]
    b = 2.0 * (ex * dx + ey * dy)
    cc = ex * ex + ey * ey - r * r
    # roots multiply to cc; p itself is the tiny one
    u = (-b + math.copysign(math.sqrt(max(b * b - 4.0 * cc, 0.0)), -b)) / 2.0
    if u != 0.0 and abs(cc / u) > abs(u):
        u = cc / u
    return p[0] + u * dx, p[1] + u * dy


def _dlb_limit(th1: float) -> float:
    """Route length over |st| when every perturbation of the gadget is zero.

    C1 is the unit circle centred at (0, 1), q2 = (0, 0) its lowest point, p1
    sits on C1 at angle th1, s on the x axis with |s q2| = |p1 q2|, and p2 is the
    mirror chord end of p1 q2.
    """
    p1 = (math.cos(th1), 1.0 + math.sin(th1))
    d = math.hypot(*p1)
    th2 = (math.pi - 2.0 * th1) % (2.0 * math.pi) - math.pi / 2.0
    p2 = (math.cos(th2), 1.0 + math.sin(th2))
    return (math.dist((-d, 0.0), p1) + math.dist(p1, p2) + th2 + math.pi / 2.0) / d


def delaunay_lowerbound_limit() -> tuple[float, float]:
    """(angle of p1 on C1, limiting ratio) for the best member of the two-circle family."""
    from scipy.optimize import minimize_scalar

    res = minimize_scalar(lambda a: -_dlb_limit(a), bounds=(math.radians(200.0), math.radians(269.0)),
                          method="bounded", options={"xatol": 1e-12})
    return float(res.x), float(-res.fun)


def gen_delaunay_lowerbound(delta: float, arc_density: int = 64) -> Gadget:
    """Two-circle Delaunay gadget on which the router travels about 5.07 |st|.

    Geometry (C1 = unit circle through its lowest point q2):
      * p1 lies on C1 low on the left, at the angle maximising the limiting ratio;
      * s sits on line st so that the circle C0 through s, p1, q2 is almost
        tangent to line s q1, with q1 mirroring p1 below the line;
      * p2 is where the chord from p1 with the mirrored slope of p1 q2 meets C1;
      * t is where line st (just above q2) leaves C1 on the right, and the arc of
        C1 from p2 down to t carries arc_density - 1 extra vertices.
    The route is s, p1, p2, then the arc down to t.

    Every "slightly" in the construction is a relative perturbation of size
    delta / 10: slope gaps at s and p1, and the offset of t from q2.  The arc
    points sit on a circle a hair larger than C1 so that the fan around q2 is
    strictly Delaunay.  As delta shrinks the ratio rises to the family limit.
    """
    if not 0.0 < delta <= 0.05:
        raise ValueError("delta must lie in (0, 0.05]")
    if arc_density < 2:
        raise ValueError("arc_density must be at least 2")
    from scipy.optimize import brentq

    eta = delta / 10.0
    th1, _ = delaunay_lowerbound_limit()
    base = math.hypot(math.cos(th1), 1.0 + math.sin(th1))
    off = eta * base
    r = 1.0 + off * off / 8.0
    c = (0.0, 1.0)
    q2 = (0.0, 0.0)
    p1 = (r * math.cos(th1), 1.0 + r * math.sin(th1))
    h = 1.0 - math.sqrt(r * r - off * off)  # height of line st above q2
    t = (off, h)
    m = abs((q2[1] - p1[1]) / (q2[0] - p1[0]))
    p2 = _chord_end(p1, m * (1.0 - eta), c, r)

    def tangent_gap(sx):
        ux, uy = _circumcenter((sx, h), p1, q2)
        tang = math.atan2(-(sx - ux), h - uy)
        k = (p1[1] - h) / (p1[0] - sx)
        return (tang + math.atan(k * (1.0 + 2.0 * eta)) + math.pi / 2.0) % math.pi - math.pi / 2.0

    s0 = -math.hypot(p1[0], p1[1] - h)
    grid = np.linspace(s0 - 0.05 * base, min(s0 + 0.05 * base, p1[0] - 1e-12), 2001)
    roots = []
    for a, b in zip(grid, grid[1:]):
        ga, gb = tangent_gap(a), tangent_gap(b)
        if ga * gb < 0 and abs(ga) < 0.5 and abs(gb) < 0.5:
            roots.append(brentq(tangent_gap, a, b, xtol=1e-16))
    if not roots:
        raise GeneratorError("no position of s makes line s q1 nearly tangent to C0")
    s = (min(roots, key=lambda x: abs(x - s0)), h)
    k = (p1[1] - h) / (p1[0] - s[0])
    u = _circumcenter(s, p1, q2)
    q1 = _chord_end(s, -k * (1.0 + eta), u, math.dist(u, s))
    # pull q1 a little towards s so that s, p1, q1, q2 are not cocircular
    q1 = (s[0] + (1.0 - 1e-3) * (q1[0] - s[0]), s[1] + (1.0 - 1e-3) * (q1[1] - s[1]))
    a2 = math.atan2(p2[1] - 1.0, p2[0])
    at = math.atan2(t[1] - 1.0, t[0])
    arc = [(r * math.cos(a2 + (at - a2) * i / arc_density), 1.0 + r * math.sin(a2 + (at - a2) * i / arc_density))
           for i in range(1, arc_density)]
    raw = [s, t, p1, q1, q2, p2] + arc
    pts = [(x - s[0], y - h) for x, y in raw]
    tri = delaunay(pts)
    if not is_delaunay(tri):
        raise GeneratorError("gadget failed the empty-circumdisc check")
    marks = {"s": 0, "t": 1, "p1": 2, "q1": 3, "q2": 4, "p2": 5}
    for a, b, cc in ((0, 2, 3), (2, 4, 5)):
        if not any(set(T) == {a, b, cc} for T in tri.triangles):
            raise GeneratorError(f"designed triangle ({a}, {b}, {cc}) is missing")
    return Gadget(tri, marks, {"delta": delta, "arc_density": arc_density})


# ---------------------------------------------------------------- fan gadgets

FAN_H = 1e-4
_C225 = math.cos(math.radians(22.5))
_S225 = math.sin(math.radians(22.5))
_R2 = math.sqrt(2.0)


def _fan_points(k: int, h: float = FAN_H):
    """s, then the fan columns top/bottom; returns (points, triangles, top ids, bottom ids)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    pts = [(0.0, 0.0)]
    top, bot = [], []
    for j in range(k):
        top.append(len(pts))
        pts.append((1.0 + j * h, 1.0))
        bot.append(len(pts))
        pts.append((1.0 + j * h, -1.0))
    tris = [(0, bot[0], top[0])]
    for j in range(k - 1):
        tris.append((top[j], bot[j], top[j + 1]))
        tris.append((bot[j], bot[j + 1], top[j + 1]))
    return pts, tris, top, bot


def _fan_tail(k: int, mirrored: bool, h: float = FAN_H):
    pts, tris, top, bot = _fan_points(k, h)
    q, qq = top[-1], bot[-1]
    qx = pts[q][0]
    sgn = -1.0 if mirrored else 1.0
    # B sees q and q' at a right angle; q', B and t are collinear; qBtA is a square
    near, far = (q, qq) if not mirrored else (qq, q)
    bx, by = qx + math.sin(math.pi / 4), sgn * (1.0 - (1.0 + math.cos(math.pi / 4)))
    tx = qx + 1.0 + _R2
    ax, ay = qx + 1.0 + math.cos(math.pi / 4), sgn * (1.0 + math.cos(math.pi / 4))
    B = len(pts)
    pts.append((bx, by))
    T = len(pts)
    pts.append((tx, 0.0))
    A = len(pts)
    pts.append((ax, ay))
    tris += [(q, qq, B), (near, B, A), (A, B, T)]
    marks = {"s": 0, "t": T, "q": q, "q'": qq, "A": A, "B": B, "T0": top[0], "B0": bot[0]}
    return pts, tris, marks


@dataclass
class FanPair:
    """The fan gadget and its mirror image, plus constants measured on the geometry."""

    first: Gadget
    second: Gadget
    fan_width: float
    deception_ratio: float
    competitive_ratio: float
    st_length: float


def gen_fan_lowerbound(k: int) -> FanPair:
    from .metrics import shortest_distance

    out = []
    for mirrored in (False, True):
        pts, tris, marks = _fan_tail(k, mirrored)
        t = Triangulation(pts, tris)
        if not is_gabriel(t):
            raise GeneratorError("fan gadget is not Gabriel")
        out.append(Gadget(t, marks, {"k": k, "mirrored": mirrored}))
    tri = out[0].triangulation
    P = tri.points
    m = out[0].marks
    fan = (k - 1) * FAN_H
    d_qt = shortest_distance(tri.graph, m["q"], m["t"])
    d_q2t = shortest_distance(tri.graph, m["q'"], m["t"])
    s_top = dist(P[m["s"]], P[m["T0"]])
    s_bot = dist(P[m["s"]], P[m["B0"]])
    # a thin fan is crossed for free in the limit, so its width leaves both lengths
    st = dist(P[m["s"]], P[m["t"]]) - fan
    deception = (s_top + d_qt) / st
    competitive = (s_top + d_qt) / (s_bot + d_q2t)
    return FanPair(out[0], out[1], fan, deception, competitive, st)


def gen_no_self_approaching(k: int) -> Gadget:
    """Fan gadget followed by a three-triangle tail that punishes going through q.

    Leaving s towards the top of the fan moves away from B, and every exit from
    q bends back from t or from B, so no s->t path through q is self-approaching.
    The lower route s, B0, ..., q', B, t stays self-approaching.  All angles are
    at most 90 degrees.
    """
    pts, tris, top, bot = _fan_points(k)
    q, qq = top[-1], bot[-1]
    qx, qy = pts[q]
    B = len(pts)
    pts.append((qx + 1.16, qy - 1.78))
    T = len(pts)
    pts.append((qx + 3.0, 0.0))
    A = len(pts)
    pts.append((qx + 1.97, qy + 1.12))
    tris += [(q, qq, B), (q, B, A), (A, B, T)]
    if len(pts) > 14:
        raise GeneratorError("gadget too large for exhaustive enumeration")
    t = Triangulation(pts, tris)
    if not is_gabriel(t):
        raise GeneratorError("gadget is not Gabriel")
    P = t.points
    pq, pa, pt = P[q], P[A], P[T]
    # walking from q to A must not bring t closer
    if (pa.x - pq.x) * (pt.x - pa.x) + (pa.y - pq.y) * (pt.y - pa.y) >= 0:
        raise GeneratorError("angle q A t is not acute")
    marks = {"s": 0, "t": T, "q": q, "q'": qq, "A": A, "B": B, "T0": top[0], "B0": bot[0]}
    return Gadget(t, marks, {"k": k})
