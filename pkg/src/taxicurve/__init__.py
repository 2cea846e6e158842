__version__ = "0.1.0"

from . import core, conic, polygonize, measures, scan
from .core.metric import Point, Line, Metric, TAXICAB, EUCLIDEAN
from .conic.classifier import classify
from .polygonize.polygon import sum_ellipse_polygon
from .measures.oracle import measures_oracle, reconcile
from .scan.sweep import ScanConfig, scan_area_perimeter

__all__ = [
    # shortcuts
    "Point",
    "Line",
    "Metric",
    "TAXICAB",
    "EUCLIDEAN",
    "classify",
    "sum_ellipse_polygon",
    "measures_oracle",
    "reconcile",
    "ScanConfig",
    "scan_area_perimeter",
    # packages
    "core",
    "conic",
    "polygonize",
    "measures",
    "scan"
]
