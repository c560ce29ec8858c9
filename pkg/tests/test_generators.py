import math
from itertools import combinations

import numpy as np
import pytest

from anglemono.generators import (
    delaunay_lowerbound_limit,
    gen_delaunay_lowerbound,
    gen_fan_lowerbound,
    gen_gabriel_worstcase,
    gen_general_worstcase,
    gen_grid_gabriel,
    gen_no_self_approaching,
    gen_random,
    gen_random_graph,
    gen_regular_ngon,
    general_position_offenders,
)
from anglemono.graph import is_self_approaching
from anglemono.halftheta import build_half_theta6
from anglemono.routing import RoutingFrame, route, routing_ratio, routing_ratio_bound, verify_x_increasing
from anglemono.triangulation import is_delaunay, is_gabriel, max_angle
from conftest import simple_paths

C = math.cos(math.radians(22.5))
S = math.sin(math.radians(22.5))
DECEPTION = (math.sqrt(2) + 4 * C) / (1 + 1 / math.tan(math.radians(22.5)))
COMPETITIVE = (math.sqrt(2) + 4 * C) / (math.sqrt(2) + (1 - math.cos(math.radians(45))) / S + 2 * C)


def gadget_ratio(g):
    t = g.triangulation
    return routing_ratio(route(t, g.s, g.t), RoutingFrame(t.points, g.s, g.t))


def test_random_is_deterministic_and_general():
    a, b = gen_random(200, 5), gen_random(200, 5)
    assert a == b
    assert gen_random(200, 6) != a
    assert not general_position_offenders(a)
    build_half_theta6(a)


def test_random_graph_deterministic():
    assert gen_random_graph(9, 0.5, 3) == gen_random_graph(9, 0.5, 3)


def test_grid():
    t = gen_grid_gabriel(3)
    assert t.n == 16 and len(t.triangles) == 18
    assert is_gabriel(t)


def test_ngon():
    with pytest.warns(UserWarning):
        pts = gen_regular_ngon(23)
    assert len(pts) == 23
    for i, j in combinations(range(23), 2):
        assert math.dist(pts[i], pts[j]) == pytest.approx(2 * math.sin(math.pi * (j - i) / 23), abs=1e-12)
    assert gen_regular_ngon(3) == gen_regular_ngon(3)


def test_gabriel_worstcase_sequence():
    ratios = []
    for eps in (1e-1 * 0.99, 1e-2, 1e-3):
        g = gen_gabriel_worstcase(eps)
        t = g.triangulation
        assert is_gabriel(t)
        tr = route(t, g.s, g.t)
        assert verify_x_increasing(tr, RoutingFrame(t.points, g.s, g.t))
        ratios.append(gadget_ratio(g))
    assert ratios == sorted(ratios)
    assert abs(ratios[-1] - (1 + math.sqrt(2))) < 0.01
    assert ratios[-1] <= 1 + math.sqrt(2) + 1e-9


@pytest.mark.parametrize("deg", [90, 100, 110, 118])
def test_general_worstcase(deg):
    alpha = math.radians(deg)
    g = gen_general_worstcase(alpha, 1e-3)
    assert max_angle(g.triangulation) <= alpha + 1e-9
    bound = routing_ratio_bound(alpha)
    r = gadget_ratio(g)
    assert bound * 0.99 <= r <= bound + 1e-9


def test_general_worstcase_rejects():
    with pytest.raises(ValueError):
        gen_general_worstcase(math.radians(121), 1e-3)
    with pytest.raises(ValueError):
        gen_gabriel_worstcase(0.5)


def test_delaunay_lowerbound_family_limit():
    th, lim = delaunay_lowerbound_limit()
    assert math.degrees(th) == pytest.approx(254.186, abs=1e-3)
    assert lim == pytest.approx(5.068559, abs=1e-6)


def test_delaunay_lowerbound_sweep():
    rs = []
    for d in (0.05, 0.03, 0.02, 0.01, 0.005):
        g = gen_delaunay_lowerbound(d)
        assert is_delaunay(g.triangulation)
        rs.append(gadget_ratio(g))
    assert min(rs) >= 5.0
    assert rs == sorted(rs)
    _, lim = delaunay_lowerbound_limit()
    assert rs[-1] < lim


def test_delaunay_lowerbound_is_deterministic():
    a = gen_delaunay_lowerbound(0.02).triangulation
    b = gen_delaunay_lowerbound(0.02).triangulation
    assert a.points == b.points and a.triangles == b.triangles


def test_delaunay_lowerbound_rejects():
    for d in (0.0, 0.06, -1.0):
        with pytest.raises(ValueError):
            gen_delaunay_lowerbound(d)


def test_fan_constants_from_geometry():
    pair = gen_fan_lowerbound(3)
    assert is_gabriel(pair.first.triangulation) and is_gabriel(pair.second.triangulation)
    assert pair.st_length == pytest.approx(1 + 1 / math.tan(math.radians(22.5)), abs=1e-12)
    assert pair.deception_ratio == pytest.approx(DECEPTION, abs=1e-12)
    assert pair.competitive_ratio == pytest.approx(COMPETITIVE, abs=1e-12)


def test_fan_mirror_is_reflection():
    pair = gen_fan_lowerbound(2)
    p1 = np.array(pair.first.points)
    p2 = np.array(pair.second.points)
    fan = p1[: 2 * 2 + 1]
    assert np.array_equal(fan, p2[: 2 * 2 + 1])
    tail1, tail2 = p1[5:], p2[5:]
    assert np.allclose(tail1[:, 0], tail2[:, 0]) and np.allclose(tail1[:, 1], -tail2[:, 1])


@pytest.mark.parametrize("k", [1, 2, 3])
def test_no_self_approaching(k):
    g = gen_no_self_approaching(k)
    t = g.triangulation
    assert is_gabriel(t)
    paths = simple_paths(t.graph.adjacency, g.s, g.t)
    through = [p for p in paths if g.marks["q"] in p]
    avoid = [p for p in paths if g.marks["q"] not in p]
    assert through and avoid
    assert not any(is_self_approaching(t.graph, p) for p in through)
    assert any(is_self_approaching(t.graph, p) for p in avoid)
