"""Spanning, routing and competitive ratios."""
from __future__ import annotations

import math

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, dijkstra

from .errors import DisconnectedError, PathError
from .geometry import TAU_ANGLE, TAU_LEN, dist
from .graph import GeometricGraph, path_length, path_width


def _csr(g: GeometricGraph) -> csr_matrix:
    e = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)
    w = np.hypot(g.xs[e[:, 0]] - g.xs[e[:, 1]], g.ys[e[:, 0]] - g.ys[e[:, 1]])
    rows = np.concatenate([e[:, 0], e[:, 1]])
    cols = np.concatenate([e[:, 1], e[:, 0]])
    return csr_matrix((np.concatenate([w, w]), (rows, cols)), shape=(g.n, g.n))


def _require_connected(g: GeometricGraph, mat=None) -> None:
    k, labels = connected_components(mat if mat is not None else _csr(g), directed=False)
    if k > 1:
        first = int(labels[0])
        other = int(np.nonzero(labels != first)[0][0])
        raise DisconnectedError(0, other)


def shortest_path_matrix(g: GeometricGraph, sources=None) -> np.ndarray:
    mat = _csr(g)
    return dijkstra(mat, directed=False, indices=sources)


def shortest_distance(g: GeometricGraph, a: int, b: int) -> float:
    d = float(shortest_path_matrix(g, [a])[0, b])
    if not math.isfinite(d):
        raise DisconnectedError(a, b)
    return d


def ratio_matrix(g: GeometricGraph) -> np.ndarray:
    """Graph distance over Euclidean distance for every ordered pair (diagonal 1)."""
    mat = _csr(g)
    _require_connected(g, mat)
    sp = dijkstra(mat, directed=False)
    eu = np.hypot(g.xs[:, None] - g.xs[None, :], g.ys[:, None] - g.ys[None, :])
    np.fill_diagonal(eu, 1.0)
    r = sp / eu
    np.fill_diagonal(r, 1.0)
    return r


def spanning_ratio(g: GeometricGraph) -> tuple[float, tuple[int, int] | None]:
    """Largest stretch over all vertex pairs, with the smallest achieving pair (i < j)."""
    if g.n < 2:
        return 1.0, None
    r = ratio_matrix(g)
    iu = np.triu_indices(g.n, 1)
    vals = r[iu]
    k = int(np.argmax(vals))
    return float(vals[k]), (int(iu[0][k]), int(iu[1][k]))


def competitive_ratio(t, trace) -> float:
    g = t.graph if hasattr(t, "graph") else t
    best = shortest_distance(g, trace.source, trace.target)
    if best == 0.0:
        return 1.0
    return path_length(g, trace) / best


def width_stretch_bound(gamma: float) -> float:
    return 1.0 / math.cos(gamma / 2.0)


def check_obs1(g: GeometricGraph, trace, gamma: float) -> bool:
    """Length of a width-gamma path is at most |endpoints| / cos(gamma / 2)."""
    if trace.num_edges == 0:
        return True
    width = path_width(g, trace)[1]
    if width > gamma + TAU_ANGLE:
        raise PathError(f"path width {math.degrees(width):.6f} exceeds {math.degrees(gamma):.6f} degrees")
    d = dist(g.points[trace.source], g.points[trace.target])
    return path_length(g, trace) <= d * width_stretch_bound(gamma) + TAU_LEN
