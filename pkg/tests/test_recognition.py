import math

import pytest

from anglemono.generators import gen_grid_gabriel, gen_lattice, gen_random, gen_random_graph
from anglemono.geometry import Wedge
from anglemono.graph import GeometricGraph, in_diametral_disc_path, is_angle_monotone_path
from anglemono.halftheta import build_half_theta6
from anglemono.recognition import (
    brute_force_reach,
    brute_force_width,
    certificate_path,
    certificates,
    explore_from_source,
    explore_width,
    is_angle_monotone,
    is_angle_monotone_width,
)
from anglemono.triangulation import delaunay, is_gabriel

RIGHT = math.pi / 2


def test_star_seeds_degenerate_pairs():
    g = GeometricGraph([(0, 0), (1, 0), (0, 1), (-1, -0.5)], [(0, 1), (0, 2), (0, 3)])
    tab = explore_from_source(g, 0)
    for v in (1, 2, 3):
        (w,) = tab.pairs(v)
        assert w.min == w.max
    assert certificate_path(tab, 0, 2).vertices == (0, 2)


def test_path_propagation():
    g = GeometricGraph([(0, 0), (1, 0), (1, 1)], [(0, 1), (1, 2)])
    assert explore_from_source(g, 0).pairs(2) == [Wedge(0.0, RIGHT)]
    a = math.radians(100)
    g = GeometricGraph([(0, 0), (1, 0), (1 + math.cos(a), math.sin(a))], [(0, 1), (1, 2)])
    assert explore_from_source(g, 0).pairs(2) == []


def test_small_decisions(unit_square):
    assert is_angle_monotone(GeometricGraph([(0, 0), (1, 1)], [(0, 1)])) == (True, None)
    sq = GeometricGraph(unit_square, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert is_angle_monotone(sq) == (True, None)
    p = GeometricGraph([(0, 0), (1, 0), (0.9, 1)], [(0, 1), (1, 2)])
    assert is_angle_monotone(p) == (False, (0, 2))


def test_width_examples():
    a = math.radians(140)
    g = GeometricGraph([(0, 0), (1, 0), (1 + math.cos(a), math.sin(a))], [(0, 1), (1, 2)])
    assert not is_angle_monotone_width(g, math.radians(130))[0]
    assert is_angle_monotone_width(g, math.radians(150))[0]
    assert brute_force_width(GeometricGraph([(0, 0), (1, 1)], [(0, 1)]), RIGHT)
    assert not brute_force_width(GeometricGraph([(0, 0), (1, 1)]), RIGHT)
    with pytest.raises(ValueError):
        is_angle_monotone_width(g, math.pi)
    with pytest.raises(ValueError):
        explore_from_source(g, 0, math.radians(120))


def test_gabriel_triangulations_are_angle_monotone():
    for t in (gen_grid_gabriel(4), gen_lattice(3, 3, stretch=1.0)):
        assert is_gabriel(t)
        assert is_angle_monotone(t.graph) == (True, None)


def test_half_theta_is_120_monotone():
    g = build_half_theta6(gen_random(30, 3))
    assert is_angle_monotone_width(g, math.radians(120)) == (True, None)


@pytest.mark.parametrize("seed", range(40))
def test_agrees_with_brute_force(seed):
    g = gen_random_graph(6, (0.3, 0.6, 0.9)[seed % 3], seed)
    for deg in (60, 90, 120, 150):
        gamma = math.radians(deg)
        assert is_angle_monotone_width(g, gamma)[0] == brute_force_width(g, gamma)
    assert is_angle_monotone(g)[0] == brute_force_width(g, RIGHT)


@pytest.mark.parametrize("seed", range(10))
def test_reach_sets_match(seed):
    g = gen_random_graph(7, 0.5, seed)
    for s in range(g.n):
        tab = explore_width(g, s, math.radians(120))
        got = {v for v in range(g.n) if tab.has_pairs(v)}
        assert got == brute_force_reach(g, s, math.radians(120))


def test_pruning_does_not_change_decisions():
    for seed in range(15):
        g = gen_random_graph(7, 0.6, seed)
        for deg in (90, 135):
            gam = math.radians(deg)
            assert is_angle_monotone_width(g, gam, prune=True) == is_angle_monotone_width(g, gam, prune=False)


def test_monotone_in_width():
    for seed in range(20):
        g = gen_random_graph(6, 0.6, seed)
        seen_yes = False
        for deg in (60, 90, 120, 150, 170):
            ok = is_angle_monotone_width(g, math.radians(deg))[0]
            assert ok or not seen_yes
            seen_yes |= ok


def test_certificates_are_valid():
    t = delaunay(gen_random(40, 1))
    g = t.graph
    for s in range(0, g.n, 7):
        tab = explore_from_source(g, s)
        for v, tr in certificates(tab).items():
            assert tr.source == s and tr.target == v
            assert is_angle_monotone_path(g, tr, RIGHT)
            assert in_diametral_disc_path(g, tr)
    tab = explore_width(g, 0, math.radians(150))
    for v, tr in certificates(tab).items():
        assert is_angle_monotone_path(g, tr, math.radians(150))


def test_witness_is_lexicographically_smallest():
    g = gen_random_graph(7, 0.4, 123)
    ok, wit = is_angle_monotone(g)
    if ok:
        pytest.skip("instance happens to be angle-monotone")
    first = min(
        (s, v) for s in range(g.n) for v in range(g.n) if v not in brute_force_reach(g, s, RIGHT)
    )
    assert wit == first


def test_brute_force_size_guard():
    with pytest.raises(ValueError):
        brute_force_width(GeometricGraph(gen_random(13, 0)), RIGHT)
