"""Planar primitives: filtered-exact sign predicates, edge angles and wedges.

Sign predicates evaluate in double precision first and fall back to exact
rational arithmetic (``fractions.Fraction``) only when the forward error bound
cannot certify the sign.  Angles are radians in ``[0, 2*pi)``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DegenerateInputError

TWO_PI = 2.0 * math.pi
TAU_ANGLE = 1e-9
TAU_LEN = 1e-9

CW = -1
COLLINEAR = 0
CCW = 1

_EPS = 2.0 ** -53
_CCW_ERRBOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_ERRBOUND = (10.0 + 96.0 * _EPS) * _EPS


class Point(NamedTuple):
    x: float
    y: float


def make_point(x, y) -> Point:
    x = float(x)
    y = float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DegenerateInputError(f"non-finite coordinate ({x}, {y})")
    return Point(x, y)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(a, b, c) -> int:
    """Sign of the signed area of triangle abc: CCW (+1), COLLINEAR (0), CW (-1)."""
    detleft = (a[0] - c[0]) * (b[1] - c[1])
    detright = (a[1] - c[1]) * (b[0] - c[0])
    det = detleft - detright
    bound = _CCW_ERRBOUND * (abs(detleft) + abs(detright))
    if det > bound or -det > bound:
        return 1 if det > 0 else -1
    return orientation_exact(a, b, c)


def orientation_exact(a, b, c) -> int:
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    return _sign((ax - cx) * (by - cy) - (ay - cy) * (bx - cx))


def _dot_sign(u, v, p) -> int:
    # sign of (u - p) . (v - p)
    t1 = (u[0] - p[0]) * (v[0] - p[0])
    t2 = (u[1] - p[1]) * (v[1] - p[1])
    det = t1 + t2
    bound = _CCW_ERRBOUND * (abs(t1) + abs(t2))
    if det > bound or -det > bound:
        return 1 if det > 0 else -1
    ux, uy = Fraction(u[0]), Fraction(u[1])
    vx, vy = Fraction(v[0]), Fraction(v[1])
    px, py = Fraction(p[0]), Fraction(p[1])
    return _sign((ux - px) * (vx - px) + (uy - py) * (vy - py))


def in_diametral_disc(u, v, p, closed: bool = False) -> bool:
    """True iff p lies in the disc with diameter uv (angle upv > 90 degrees, or >= if closed)."""
    if u[0] == v[0] and u[1] == v[1]:
        raise DegenerateInputError("diametral disc of coincident points")
    s = _dot_sign(u, v, p)
    return s <= 0 if closed else s < 0


def incircle(a, b, c, d) -> int:
    """Positive iff d is inside the circle through a, b, c (taken counter-clockwise)."""
    adx = a[0] - d[0]
    bdx = b[0] - d[0]
    cdx = c[0] - d[0]
    ady = a[1] - d[1]
    bdy = b[1] - d[1]
    cdy = c[1] - d[1]
    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady
    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy
    det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady)
    permanent = (
        (abs(bdxcdy) + abs(cdxbdy)) * alift
        + (abs(cdxady) + abs(adxcdy)) * blift
        + (abs(adxbdy) + abs(bdxady)) * clift
    )
    bound = _ICC_ERRBOUND * permanent
    if det > bound or -det > bound:
        return 1 if det > 0 else -1
    return incircle_exact(a, b, c, d)


def incircle_exact(a, b, c, d) -> int:
    dx, dy = Fraction(d[0]), Fraction(d[1])
    rows = []
    for p in (a, b, c):
        x = Fraction(p[0]) - dx
        y = Fraction(p[1]) - dy
        rows.append((x, y, x * x + y * y))
    (ax, ay, al), (bx, by, bl), (cx, cy, cl) = rows
    det = al * (bx * cy - cx * by) + bl * (cx * ay - ax * cy) + cl * (ax * by - bx * ay)
    return _sign(det)


def sign_sqrt3(a, b) -> int:
    """Exact sign of a + b*sqrt(3) for rationals a, b."""
    sa, sb = _sign(a), _sign(b)
    if sa == sb or sb == 0:
        return sa
    if sa == 0:
        return sb
    # opposite signs: compare a^2 against 3 b^2
    return sa * _sign(a * a - 3 * b * b)


def norm_angle(a: float) -> float:
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:
        a = 0.0
    return a


def edge_angle(u, v) -> float:
    dx = v[0] - u[0]
    dy = v[1] - u[1]
    if dx == 0.0 and dy == 0.0:
        raise DegenerateInputError("angle of a zero-length edge")
    return norm_angle(math.atan2(dy, dx))


def ccw_span(a: float, b: float) -> float:
    """Counter-clockwise distance from angle a to angle b, in [0, 2*pi)."""
    d = b - a
    if d < 0.0:
        d += TWO_PI
    if d >= TWO_PI:
        d -= TWO_PI
    return d


class Wedge(NamedTuple):
    min: float
    max: float

    @property
    def span(self) -> float:
        return ccw_span(self.min, self.max)


def _span_or_zero(a: float, b: float) -> float:
    # spans within rounding noise of a full turn are a wrapped zero
    d = ccw_span(a, b)
    return 0.0 if d > TWO_PI - TAU_ANGLE else d


def wedge_extend(w: Wedge, a: float, gamma: float) -> Optional[Wedge]:
    """Add angle a to wedge w; None when the result would be wider than gamma."""
    span = _span_or_zero(w.min, w.max)
    to_a = _span_or_zero(w.min, a)
    if to_a <= span:
        return w
    if to_a <= gamma + TAU_ANGLE:
        return Wedge(w.min, a)
    if _span_or_zero(a, w.max) <= gamma + TAU_ANGLE:
        return Wedge(a, w.max)
    return None


def wedge_contains(outer: Wedge, inner: Wedge) -> bool:
    """True iff inner lies inside outer (closed, with angular tolerance)."""
    span = _span_or_zero(outer.min, outer.max)
    lo = _span_or_zero(outer.min, inner.min)
    hi = lo + _span_or_zero(inner.min, inner.max)
    return hi <= span + TAU_ANGLE


def min_enclosing_wedge(angles: Iterable[float]) -> tuple[float, float]:
    """Bisector and width of the narrowest closed wedge containing all angles."""
    s = sorted(norm_angle(a) for a in angles)
    if not s:
        raise ValueError("min_enclosing_wedge of an empty sequence")
    best_gap = s[0] + TWO_PI - s[-1]
    start = s[0]
    for i in range(1, len(s)):
        gap = s[i] - s[i - 1]
        if gap > best_gap:
            best_gap = gap
            start = s[i]
    width = max(TWO_PI - best_gap, 0.0)
    return norm_angle(start + width / 2.0), width


def dist(a, b) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def segments_properly_cross(a, b, c, d) -> bool:
    """True iff open segments ab and cd cross at a single interior point."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    if o1 == 0 or o2 == 0 or o1 == o2:
        return False
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    return o3 != 0 and o4 != 0 and o3 != o4


def triangle_angles(a, b, c) -> tuple[float, float, float]:
    """Interior angles at a, b, c."""
    def at(p, q, r):
        ux, uy = q[0] - p[0], q[1] - p[1]
        vx, vy = r[0] - p[0], r[1] - p[1]
        return abs(math.atan2(ux * vy - uy * vx, ux * vx + uy * vy))

    return at(a, b, c), at(b, c, a), at(c, a, b)


def as_points(coords: Sequence) -> list[Point]:
    return [make_point(x, y) for x, y in coords]
