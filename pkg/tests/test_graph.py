import math

import pytest

from anglemono.errors import DegenerateInputError, PathError
from anglemono.graph import (
    GeometricGraph,
    PathTrace,
    in_diametral_disc_path,
    is_angle_monotone_path,
    is_self_approaching,
    path_length,
    path_width,
    reversal_preserves_width,
    validate_path,
)


def chain(*pts):
    return GeometricGraph(pts, [(i, i + 1) for i in range(len(pts) - 1)])


def test_construction_checks():
    with pytest.raises(DegenerateInputError):
        GeometricGraph([(0, 0), (0, 0)])
    with pytest.raises(DegenerateInputError):
        GeometricGraph([(0, 0), (1, 0)], [(0, 0)])
    with pytest.raises(DegenerateInputError):
        GeometricGraph([(0, 0), (1, 0)], [(0, 2)])
    g = GeometricGraph([(0, 0), (1, 0), (0, 1)], [(1, 0), (0, 1), (2, 1)])
    assert g.m == 2
    assert g.edges() == [(0, 1), (1, 2)]


def test_path_length():
    assert path_length(chain((0, 0), (3, 4)), (0, 1)) == 5.0
    assert path_length(chain((0, 0), (1, 0), (1, 1)), (0, 1, 2)) == 2.0
    assert path_length(chain((0, 0), (1, 0)), (0,)) == 0.0


def test_validate_path_rejects():
    g = chain((0, 0), (1, 0), (1, 1))
    with pytest.raises(PathError):
        validate_path(g, (0, 2))
    with pytest.raises(PathError):
        validate_path(g, (0, 1, 0))
    with pytest.raises(PathError):
        validate_path(g, ())


def test_path_width():
    b, w = path_width(chain((0, 0), (1, 0), (2, 0)), (0, 1, 2))
    assert (b, w) == (0.0, 0.0)
    g = chain((0, 0), (1, 0), (1, 1))
    b, w = path_width(g, (0, 1, 2))
    assert (b, w) == pytest.approx((math.pi / 4, math.pi / 2))
    b2, w2 = path_width(g, (2, 1, 0))
    assert w2 == pytest.approx(w)
    assert b2 == pytest.approx(b + math.pi)
    assert reversal_preserves_width(g, (0, 1, 2))


def test_angle_monotone_path():
    assert is_angle_monotone_path(chain((0, 0), (1, 0), (1, 1)), (0, 1, 2), math.pi / 2)
    assert not is_angle_monotone_path(chain((0, 0), (1, 0), (0.9, 1)), (0, 1, 2), math.pi / 2)
    assert is_angle_monotone_path(chain((0, 0), (5, -3)), (0, 1), 0.0)


def test_self_approaching():
    assert is_self_approaching(chain((0, 0), (1, 0), (1, 1)), (0, 1, 2))
    assert not is_self_approaching(chain((0, 0), (2, 0), (0, 0.1)), (0, 1, 2))


def test_square_spiral_is_not_self_approaching():
    # walking from (0, 0) to (1, 0) moves away from the final vertex (0.1, 1) near the end
    g = chain((0, 0), (1, 0), (1, 1), (0.1, 1))
    assert not is_self_approaching(g, (0, 1, 2, 3))
    # the spiral cut one vertex short is fine
    assert is_self_approaching(g, (0, 1, 2))


def test_diametral_disc_path():
    assert in_diametral_disc_path(chain((0, 0), (1, 0)), (0, 1))
    assert not in_diametral_disc_path(chain((0, 0), (0, 2), (1, 0)), (0, 1, 2))
    assert in_diametral_disc_path(chain((0, 0), (1, 0), (1, 1)), (0, 1, 2))


def test_trace_annotations():
    tr = PathTrace((3, 1, 2), ("A", "B"), (False, True))
    assert tr.source == 3 and tr.target == 2 and tr.num_edges == 2
    r = tr.reversed()
    assert r.vertices == (2, 1, 3) and r.steps == ("B", "A")
    with pytest.raises(PathError):
        PathTrace((0, 1), ("A", "B"))
