"""Recognition of angle-monotone graphs (width 90, or any width below 180).

For a source s every vertex v keeps a list of wedges (min, max): the extreme
edge directions of some angle-monotone s->v path.  A wedge that contains
another stored wedge at the same vertex is redundant and is dropped, so each
list is an antichain under containment.  Every stored wedge remembers the
wedge it was extended from, which is enough to rebuild a certificate path.
"""
from __future__ import annotations

import math
from typing import Optional

from .errors import PathError
from .geometry import TAU_ANGLE, Wedge, edge_angle, min_enclosing_wedge, wedge_contains, wedge_extend
from .graph import GeometricGraph, PathTrace

RIGHT = math.pi / 2.0
BRUTE_FORCE_MAX_N = 12


class _Node:
    __slots__ = ("vertex", "wedge", "parent")

    def __init__(self, vertex: int, wedge: Optional[Wedge], parent: Optional["_Node"]):
        self.vertex = vertex
        self.wedge = wedge
        self.parent = parent


class WedgePairTable:
    """Per-vertex wedge lists for one source, with predecessor links."""

    def __init__(self, g: GeometricGraph, source: int, gamma: float, prune: bool = True):
        self.graph = g
        self.source = source
        self.gamma = gamma
        self.prune = prune
        self.root = _Node(source, None, None)
        self.lists: list[list[_Node]] = [[] for _ in range(g.n)]

    def insert(self, v: int, w: Wedge, parent: _Node) -> bool:
        """Store w at v unless an existing wedge sits inside it; True if stored."""
        cur = self.lists[v]
        if self.prune:
            for node in cur:
                if wedge_contains(w, node.wedge):
                    return False
            cur[:] = [node for node in cur if not wedge_contains(node.wedge, w)]
        else:
            for node in cur:
                if node.wedge == w:
                    return False
        cur.append(_Node(v, w, parent))
        return True

    def pairs(self, v: int) -> list[Wedge]:
        return [node.wedge for node in self.lists[v]]

    def has_pairs(self, v: int) -> bool:
        return v == self.source or bool(self.lists[v])

    def empty_vertices(self) -> list[int]:
        return [v for v in range(self.graph.n) if not self.has_pairs(v)]

    def size(self, v: int) -> int:
        return len(self.lists[v])


def _angles(g: GeometricGraph) -> dict[tuple[int, int], float]:
    cache = getattr(g, "_edge_angles", None)
    if cache is None:
        cache = {}
        for u, nb in enumerate(g.adjacency):
            for v in nb:
                cache[(u, v)] = edge_angle(g.points[u], g.points[v])
        g._edge_angles = cache
    return cache


def _check_gamma(gamma: float) -> None:
    if not 0.0 < gamma < math.pi:
        raise ValueError("width must lie strictly between 0 and 180 degrees")


def _seed(table: WedgePairTable, ang) -> None:
    s = table.source
    for u in table.graph.adjacency[s]:
        a = ang[(s, u)]
        table.insert(u, Wedge(a, a), table.root)


def explore_from_source(g: GeometricGraph, s: int, gamma: float = RIGHT, prune: bool = True) -> WedgePairTable:
    """Width-90 exploration in order of increasing distance from s."""
    if abs(gamma - RIGHT) > TAU_ANGLE:
        raise ValueError("the distance-ordered exploration is only valid for width 90 degrees")
    ang = _angles(g)
    table = WedgePairTable(g, s, RIGHT, prune)
    _seed(table, ang)
    ps = g.points[s]
    order = sorted(range(g.n), key=lambda v: (math.hypot(g.points[v].x - ps.x, g.points[v].y - ps.y), v))
    rank = {v: i for i, v in enumerate(order)}
    for u in order:
        if u == s or not table.lists[u]:
            continue
        ru = rank[u]
        for v in g.adjacency[u]:
            if rank[v] <= ru:
                continue
            a = ang[(u, v)]
            for node in list(table.lists[u]):
                w = wedge_extend(node.wedge, a, RIGHT)
                if w is not None:
                    table.insert(v, w, node)
    return table


def explore_width(g: GeometricGraph, s: int, gamma: float, prune: bool = True) -> WedgePairTable:
    """Phase-based exploration for any width gamma in (0, pi).

    Each phase pushes every stored wedge across every edge; the loop stops at the
    first phase that stores nothing new, and never runs more than n - 1 phases.
    """
    _check_gamma(gamma)
    ang = _angles(g)
    table = WedgePairTable(g, s, gamma, prune)
    _seed(table, ang)
    for _ in range(max(g.n - 1, 0)):
        changed = False
        for u in range(g.n):
            if u == s or not table.lists[u]:
                continue
            for v in g.adjacency[u]:
                if v == s:
                    continue
                a = ang[(u, v)]
                for node in list(table.lists[u]):
                    w = wedge_extend(node.wedge, a, gamma)
                    if w is not None and table.insert(v, w, node):
                        changed = True
        if not changed:
            break
    return table


def _decide(g: GeometricGraph, explore) -> tuple[bool, Optional[tuple[int, int]]]:
    for s in range(g.n):
        empty = explore(s).empty_vertices()
        if empty:
            return False, (s, empty[0])
    return True, None


def is_angle_monotone(g: GeometricGraph, prune: bool = True) -> tuple[bool, Optional[tuple[int, int]]]:
    """(decision, witness); the witness is the lexicographically smallest failing pair."""
    return _decide(g, lambda s: explore_from_source(g, s, RIGHT, prune))


def is_angle_monotone_width(g: GeometricGraph, gamma: float, prune: bool = True):
    _check_gamma(gamma)
    return _decide(g, lambda s: explore_width(g, s, gamma, prune))


def certificate_path(table: WedgePairTable, s: int, v: int) -> PathTrace:
    if s != table.source:
        raise ValueError(f"table was built for source {table.source}, not {s}")
    if v == s:
        return PathTrace((s,))
    nodes = table.lists[v]
    if not nodes:
        raise PathError(f"no angle-monotone path from {s} to {v}")
    node = min(nodes, key=lambda nd: (nd.wedge.span, nd.wedge.min))
    out = []
    while node is not None:
        out.append(node.vertex)
        node = node.parent
    return PathTrace(tuple(reversed(out)))


def certificates(table: WedgePairTable) -> dict[int, PathTrace]:
    return {v: certificate_path(table, table.source, v) for v in range(table.graph.n) if v != table.source and table.lists[v]}


def brute_force_width(g: GeometricGraph, gamma: float) -> bool:
    """Exhaustive search over simple paths; an independent check for small graphs."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_MAX_N} vertices")
    _check_gamma(gamma)
    return all(len(brute_force_reach(g, s, gamma)) == g.n for s in range(g.n))


def brute_force_reach(g: GeometricGraph, s: int, gamma: float) -> set[int]:
    pts = g.points
    reached = {s}

    def dfs(u, visited, angles):
        for v in g.adjacency[u]:
            if v in visited:
                continue
            a = math.atan2(pts[v].y - pts[u].y, pts[v].x - pts[u].x)
            nxt = angles + [a]
            if min_enclosing_wedge(nxt)[1] > gamma + TAU_ANGLE:
                continue
            reached.add(v)
            visited.add(v)
            dfs(v, visited, nxt)
            visited.discard(v)

    dfs(s, {s}, [])
    return reached
