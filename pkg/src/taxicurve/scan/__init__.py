from .region import ImplicitRegion, SumEllipseRegion, region_x_extent
from .sweep import (
    ScanConfig,
    ScanColumn,
    ScanResult,
    find_y_extremes,
    trapezoid_correction,
    column_distance,
    scan_area_perimeter
)

__all__ = [
    # region
    "ImplicitRegion",
    "SumEllipseRegion",
    "region_x_extent",
    # sweep
    "ScanConfig",
    "ScanColumn",
    "ScanResult",
    "find_y_extremes",
    "trapezoid_correction",
    "column_distance",
    "scan_area_perimeter"
]
