from . import metric
from .metric import (
    Point,
    Line,
    Metric,
    MetricKind,
    TAXICAB,
    EUCLIDEAN,
    taxicab_distance,
    euclidean_distance,
    minkowski_distance,
    point_line_distance_taxicab
)
from .schema import Tolerances, DEFAULT_TOLERANCES

__all__ = [
    "metric",
    "Point",
    "Line",
    "Metric",
    "MetricKind",
    "TAXICAB",
    "EUCLIDEAN",
    "taxicab_distance",
    "euclidean_distance",
    "minkowski_distance",
    "point_line_distance_taxicab",
    "Tolerances",
    "DEFAULT_TOLERANCES"
]
