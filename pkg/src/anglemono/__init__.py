"""Angle-monotone graphs, half-theta6 graphs and local angle routing."""
from .errors import (
    AngleMonoError,
    CocircularError,
    DegenerateInputError,
    DisconnectedError,
    FormatError,
    GeneralPositionError,
    GeneratorError,
    InvariantError,
    PathError,
)
from .geometry import TAU_ANGLE, TAU_LEN, Point, incircle, orientation
from .graph import GeometricGraph, PathTrace, is_angle_monotone_path, is_self_approaching, path_length, path_width
from .halftheta import HalfThetaGraph, angle_monotone_path_120, build_half_theta6
from .metrics import check_obs1, competitive_ratio, shortest_distance, spanning_ratio
from .recognition import brute_force_width, certificate_path, is_angle_monotone, is_angle_monotone_width
from .render import render_svg
from .routing import RoutingFrame, route, routing_ratio, routing_ratio_bound, routing_ratio_sweep, verify_x_increasing
from .triangulation import Triangulation, delaunay, is_delaunay, is_gabriel, max_angle

__version__ = "0.1.0"
