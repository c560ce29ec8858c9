import io as stdio
import json

import numpy as np
import pytest

from anglemono import io
from anglemono.errors import FormatError
from anglemono.generators import gen_grid_gabriel
from anglemono.graph import GeometricGraph, PathTrace
from anglemono.halftheta import build_half_theta6


def test_load_points_basic():
    pts = io.loads_points("3\n0 0\n1 0\n0 1\n")
    assert [tuple(p) for p in pts] == [(0, 0), (1, 0), (0, 1)]


@pytest.mark.parametrize(
    "text,line",
    [
        ("2\n0 0\n1 0\nedges 1\n0 0\n", 5),
        ("2\n0 0\n1 0\nedges 1\n1 0\n", 5),
        ("2\n0 0\n0 0\nedges 0\n", 3),
        ("2\n0 0\n1 x\nedges 0\n", 3),
        ("3\n0 0\n1 0\n", 4),
        ("2\n0 0\n1 0\nedges 2\n0 1\n0 1\n", 6),
    ],
)
def test_graph_format_errors(text, line):
    with pytest.raises(FormatError) as ei:
        io.loads_graph(text)
    assert ei.value.line == line


def test_points_round_trip_bitwise(tmp_path):
    rng = np.random.default_rng(7)
    pts = [tuple(p) for p in rng.normal(size=(1000, 2)) * 10.0 ** rng.integers(-8, 8, size=(1000, 1))]
    f1, f2 = tmp_path / "a.txt", tmp_path / "b.txt"
    io.save_points(pts, f1)
    back = io.load_points(f1)
    assert [tuple(p) for p in back] == pts
    io.save_points(back, f2)
    assert f1.read_bytes() == f2.read_bytes()


def test_graph_and_triangulation_round_trip(tmp_path):
    t = gen_grid_gabriel(3)
    p = tmp_path / "t.txt"
    io.save_triangulation(t, p)
    t2 = io.load_triangulation(p)
    assert t2.graph == t.graph
    assert sorted(t2.triangles) == sorted(t.triangles)
    g = io.load_graph(p)
    assert g == t.graph


def test_half_theta_cones_round_trip():
    h = build_half_theta6([(0.0, 0.0), (0.3, 1.0), (1.0, 0.2), (-0.7, 0.4)])
    text = io.dumps_graph(h, cones=h.attribution)
    g, tris, cones = io.loads_any(text)
    assert tris is None
    assert cones == h.attribution
    assert g == GeometricGraph(h.points, h.edges())


def test_cone_for_missing_edge_rejected():
    text = "2\n0 0\n1 1\nedges 0\ncones 1\n0 1 0 0\n"
    with pytest.raises(FormatError):
        io.loads_any(text)


def test_trace_round_trip(tmp_path):
    g = GeometricGraph([(0, 0), (1, 0), (1, 1)], [(0, 1), (1, 2)])
    tr = PathTrace((0, 1, 2), ("B", "A"), (False, True))
    p = tmp_path / "tr.json"
    io.save_trace(g, tr, p, frame_rotation=0.25)
    d = json.loads(p.read_text())
    assert d["length"] == 2.0 and d["ratio"] == pytest.approx(2 ** 0.5)
    assert d["frame_rotation"] == 0.25
    assert io.load_trace(p) == tr
    with pytest.raises(FormatError):
        io.load_trace(stdio.StringIO("{not json"))
