from .profile import PiecewiseLinearConvex, abs_sum_profile, sublevel_interval
from .polygon import (
    Polygon,
    DegenerateSet,
    DegenerateKind,
    shoelace_area,
    polygon_perimeter,
    sum_ellipse_polygon,
    lattice_circle_points
)
from .contour import BoundingBox, contour_sample

__all__ = [
    # profile
    "PiecewiseLinearConvex",
    "abs_sum_profile",
    "sublevel_interval",
    # polygon
    "Polygon",
    "DegenerateSet",
    "DegenerateKind",
    "shoelace_area",
    "polygon_perimeter",
    "sum_ellipse_polygon",
    "lattice_circle_points",
    # contour
    "BoundingBox",
    "contour_sample"
]
