"""Batch kernels for the O(n^2) and O(m^2) inner loops.

Each kernel has a numba ``@njit`` version and a vectorized numpy version with
identical outputs.  The numpy path is used when ``ANGLEMONO_PURE_NUMPY=1`` is
set or numba cannot be imported.  Kernels only ever *filter*: anything within
rounding distance of a decision boundary is flagged so the caller can settle
it with exact predicates.
"""
from __future__ import annotations

import math
import os

import numpy as np

_PURE = os.environ.get("ANGLEMONO_PURE_NUMPY", "").strip().lower() in ("1", "true", "yes")

try:
    if _PURE:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised by the fallback test run
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"

# directions within this many radians of a cone boundary get an exact recheck
NEAR_ANGLE = 1e-12
_SIXTY = math.pi / 3.0
_EPS = 2.0 ** -53
_CCW_ERR = (3.0 + 16.0 * _EPS) * _EPS
# bisector angle of cone c is 60 * ((1 - c) mod 6) + 30 degrees
BISECTOR = np.array([math.radians(60.0 * ((1 - c) % 6) + 30.0) for c in range(6)])


# ---------------------------------------------------------------- numpy path

def _cone_table_np(xs, ys):
    dx = xs[None, :] - xs[:, None]
    dy = ys[None, :] - ys[:, None]
    theta = np.arctan2(dy, dx)
    theta = np.where(theta < 0.0, theta + 2.0 * math.pi, theta)
    q = theta / _SIXTY
    k = np.floor(q).astype(np.int64) % 6
    frac = q - np.floor(q)
    near = np.minimum(frac, 1.0 - frac) * _SIXTY < NEAR_ANGLE
    cone = ((1 - k) % 6).astype(np.int8)
    n = len(xs)
    idx = np.arange(n)
    cone[idx, idx] = -1
    near[idx, idx] = False
    return cone, near


def _cone_argmin_np(xs, ys, cone):
    n = len(xs)
    nbr = np.full((n, 6), -1, dtype=np.int64)
    tie = np.zeros((n, 6), dtype=np.bool_)
    for c in range(6):
        proj = (xs[None, :] - xs[:, None]) * math.cos(BISECTOR[c]) + (
            ys[None, :] - ys[:, None]
        ) * math.sin(BISECTOR[c])
        proj = np.where(cone == c, proj, np.inf)
        best = np.argmin(proj, axis=1)
        bval = proj[np.arange(n), best]
        has = np.isfinite(bval)
        nbr[has, c] = best[has]
        # second smallest, to flag near ties
        proj2 = proj.copy()
        proj2[np.arange(n), best] = np.inf
        second = proj2.min(axis=1)
        with np.errstate(invalid="ignore"):
            gap = second - bval  # inf - inf for empty cones, masked below
        scale = np.maximum(np.maximum(np.abs(bval), np.abs(second)), 1.0)
        tie[:, c] = has & np.isfinite(second) & (gap <= 1e-12 * scale)
    return nbr, tie


def _orient_filtered_np(ax, ay, bx, by, cx, cy):
    left = (ax - cx) * (by - cy)
    right = (ay - cy) * (bx - cx)
    det = left - right
    bound = _CCW_ERR * (np.abs(left) + np.abs(right))
    sign = np.where(det > bound, 1, np.where(-det > bound, -1, 0))
    return sign, np.abs(det) <= bound


def _crossings_np(ex0, ey0, ex1, ey1, eu, ev):
    m = len(ex0)
    if m < 2:
        return np.zeros((0, 2), np.int64), np.zeros((0, 2), np.int64)
    i, j = np.triu_indices(m, 1)
    shared = (eu[i] == eu[j]) | (eu[i] == ev[j]) | (ev[i] == eu[j]) | (ev[i] == ev[j])
    i = i[~shared]
    j = j[~shared]
    o1, u1 = _orient_filtered_np(ex0[i], ey0[i], ex1[i], ey1[i], ex0[j], ey0[j])
    o2, u2 = _orient_filtered_np(ex0[i], ey0[i], ex1[i], ey1[i], ex1[j], ey1[j])
    o3, u3 = _orient_filtered_np(ex0[j], ey0[j], ex1[j], ey1[j], ex0[i], ey0[i])
    o4, u4 = _orient_filtered_np(ex0[j], ey0[j], ex1[j], ey1[j], ex1[i], ey1[i])
    unsure = u1 | u2 | u3 | u4
    cross = (~unsure) & (o1 * o2 < 0) & (o3 * o4 < 0)
    return (
        np.stack([i[cross], j[cross]], axis=1).astype(np.int64),
        np.stack([i[unsure], j[unsure]], axis=1).astype(np.int64),
    )


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _cone_table_nb(xs, ys):
        n = xs.shape[0]
        cone = np.full((n, n), -1, dtype=np.int8)
        near = np.zeros((n, n), dtype=np.bool_)
        two_pi = 2.0 * math.pi
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                t = math.atan2(ys[v] - ys[u], xs[v] - xs[u])
                if t < 0.0:
                    t += two_pi
                q = t / _SIXTY
                fq = math.floor(q)
                k = int(fq) % 6
                frac = q - fq
                near[u, v] = min(frac, 1.0 - frac) * _SIXTY < NEAR_ANGLE
                cone[u, v] = (1 - k) % 6
        return cone, near

    @njit(cache=True)
    def _cone_argmin_nb(xs, ys, cone, bis_c, bis_s):
        n = xs.shape[0]
        nbr = np.full((n, 6), -1, dtype=np.int64)
        tie = np.zeros((n, 6), dtype=np.bool_)
        for u in range(n):
            for c in range(6):
                best = np.inf
                second = np.inf
                arg = -1
                for v in range(n):
                    if cone[u, v] != c:
                        continue
                    p = (xs[v] - xs[u]) * bis_c[c] + (ys[v] - ys[u]) * bis_s[c]
                    if p < best:
                        second = best
                        best = p
                        arg = v
                    elif p < second:
                        second = p
                if arg >= 0:
                    nbr[u, c] = arg
                    scale = max(abs(best), abs(second), 1.0)
                    if second < np.inf and second - best <= 1e-12 * scale:
                        tie[u, c] = True
        return nbr, tie

    @njit(cache=True)
    def _orient_nb(ax, ay, bx, by, cx, cy):
        left = (ax - cx) * (by - cy)
        right = (ay - cy) * (bx - cx)
        det = left - right
        bound = _CCW_ERR * (abs(left) + abs(right))
        if det > bound:
            return 1
        if -det > bound:
            return -1
        return 0  # unsure

    @njit(cache=True)
    def _crossings_nb(ex0, ey0, ex1, ey1, eu, ev):
        m = ex0.shape[0]
        cross = []
        unsure = []
        for i in range(m):
            for j in range(i + 1, m):
                if eu[i] == eu[j] or eu[i] == ev[j] or ev[i] == eu[j] or ev[i] == ev[j]:
                    continue
                o1 = _orient_nb(ex0[i], ey0[i], ex1[i], ey1[i], ex0[j], ey0[j])
                o2 = _orient_nb(ex0[i], ey0[i], ex1[i], ey1[i], ex1[j], ey1[j])
                o3 = _orient_nb(ex0[j], ey0[j], ex1[j], ey1[j], ex0[i], ey0[i])
                o4 = _orient_nb(ex0[j], ey0[j], ex1[j], ey1[j], ex1[i], ey1[i])
                if o1 == 0 or o2 == 0 or o3 == 0 or o4 == 0:
                    unsure.append((i, j))
                elif o1 * o2 < 0 and o3 * o4 < 0:
                    cross.append((i, j))
        a = np.zeros((len(cross), 2), np.int64)
        for k in range(len(cross)):
            a[k, 0] = cross[k][0]
            a[k, 1] = cross[k][1]
        b = np.zeros((len(unsure), 2), np.int64)
        for k in range(len(unsure)):
            b[k, 0] = unsure[k][0]
            b[k, 1] = unsure[k][1]
        return a, b


# ---------------------------------------------------------------- dispatch

def cone_table(xs: np.ndarray, ys: np.ndarray, backend: str | None = None):
    """Cone label of every ordered pair plus a near-boundary flag per pair."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    if _pick(backend) == "numba":
        return _cone_table_nb(xs, ys)
    return _cone_table_np(xs, ys)


def cone_argmin(xs, ys, cone, backend: str | None = None):
    """Per vertex and cone, the member with the smallest bisector projection (-1 if empty)."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    cone = np.ascontiguousarray(cone, dtype=np.int8)
    if _pick(backend) == "numba":
        return _cone_argmin_nb(xs, ys, cone, np.cos(BISECTOR), np.sin(BISECTOR))
    return _cone_argmin_np(xs, ys, cone)


def crossings(xs, ys, edges, backend: str | None = None):
    """Edge-index pairs that properly cross, and pairs whose filter was inconclusive."""
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    args = (
        np.ascontiguousarray(xs[e[:, 0]]),
        np.ascontiguousarray(ys[e[:, 0]]),
        np.ascontiguousarray(xs[e[:, 1]]),
        np.ascontiguousarray(ys[e[:, 1]]),
        np.ascontiguousarray(e[:, 0]),
        np.ascontiguousarray(e[:, 1]),
    )
    if _pick(backend) == "numba":
        return _crossings_nb(*args)
    return _crossings_np(*args)


def _pick(backend: str | None) -> str:
    if backend is None:
        return BACKEND
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is unavailable")
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    return backend
