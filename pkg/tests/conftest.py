"""Independent reference implementations used as test oracles.

They share no code with the package beyond plain data access, and favour
obvious correctness over speed.
"""
import math

import numpy as np
import pytest


def floyd_warshall(points, edges):
    n = len(points)
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0.0)
    for u, v in edges:
        w = math.dist(points[u], points[v])
        d[u, v] = d[v, u] = min(d[u, v], w)
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def stretch_oracle(points, edges):
    d = floyd_warshall(points, edges)
    best, pair = 1.0, None
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            r = d[i, j] / math.dist(points[i], points[j])
            if pair is None or r > best:
                best, pair = r, (i, j)
    return best, pair


def cone_of(u, v):
    """Clockwise cone label with C0 = (60, 120) degrees, from plain degrees."""
    a = math.degrees(math.atan2(v[1] - u[1], v[0] - u[0])) % 360.0
    return (1 - int(a // 60.0)) % 6


def canonical_triangle_oracle(points):
    """Half-theta6 edges: for each even cone, the member whose canonical triangle is empty."""
    n = len(points)
    edges = set()
    for u in range(n):
        for c in (0, 2, 4):
            b = math.radians(60.0 * ((1 - c) % 6) + 30.0)
            bx, by = math.cos(b), math.sin(b)
            members = [v for v in range(n) if v != u and cone_of(points[u], points[v]) == c]
            for v in members:
                pv = (points[v][0] - points[u][0]) * bx + (points[v][1] - points[u][1]) * by
                inside = [
                    w for w in members
                    if w != v and (points[w][0] - points[u][0]) * bx + (points[w][1] - points[u][1]) * by < pv
                ]
                if not inside:
                    edges.add((min(u, v), max(u, v)))
    return edges


def simple_paths(adj, s, t, limit=None):
    """All simple s->t vertex paths, by depth-first search."""
    out = []
    stack = [(s, [s])]
    while stack:
        u, path = stack.pop()
        if u == t:
            out.append(tuple(path))
            if limit and len(out) >= limit:
                break
            continue
        for v in adj[u]:
            if v not in path:
                stack.append((v, path + [v]))
    return out


def empty_circumdisc_oracle(points, triangles):
    """True iff no point is strictly inside any triangle's circumcircle (float, with slack)."""
    P = np.asarray(points, dtype=float)
    for a, b, c in triangles:
        ax, ay = P[a]
        bx, by = P[b]
        cx, cy = P[c]
        d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
        ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / d
        uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / d
        r = math.hypot(ax - ux, ay - uy)
        dd = np.hypot(P[:, 0] - ux, P[:, 1] - uy)
        dd[[a, b, c]] = np.inf
        if np.any(dd < r * (1.0 - 1e-9)):
            return False
    return True


@pytest.fixture
def unit_square():
    return [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
