import math
import logging
import warnings
from dataclasses import dataclass, field

import pandas as pd

from ..core.metric import Point, Metric, MetricKind, TAXICAB
from ..core.schema import DEFAULT_TOLERANCES
from .region import ImplicitRegion
from .exceptions import (
    BracketExceededError,
    UnsupportedMetricError,
    ScanEmptyRegionError,
    ScanConfigError
)
from .warnings import LooseScanBoundsWarning

# set logging
logger = logging.getLogger(__name__)

@dataclass(frozen = True)
class ScanConfig:
    """
        Class representing the settings of the sweep.

        The columns are placed at `x = start_x + i * step` for every
        `i` such that `x <= end_x`.
    """

    start_x: float
    """Abscissa of the first column."""

    end_x: float
    """Upper bound of the column abscissas."""

    step: float = 0.01
    """Distance between consecutive columns."""

    metric: Metric = TAXICAB
    """Metric used to measure the perimeter; taxicab or Euclidean."""

    root_tol: float = DEFAULT_TOLERANCES.root
    """Width below which the bisection stops."""

    y_bracket: float = DEFAULT_TOLERANCES.y_bracket
    """Half-width of the initial y window `[-y_bracket, y_bracket]`."""

    exact_slices: bool = True
    """Flag to use the exact column slices of the region when it offers them."""

    max_iterations: int = DEFAULT_TOLERANCES.max_iterations
    """Iteration cap of the ternary search and of each bisection."""

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.start_x, self.end_x, self.step, self.root_tol, self.y_bracket)):
            logger.error(f"non-finite scan settings: {self}")
            raise ScanConfigError("scan settings must be finite")
        if self.start_x > self.end_x:
            logger.error(f"start_x {self.start_x} > end_x {self.end_x}")
            raise ScanConfigError(f"start_x must be <= end_x, got {self.start_x} > {self.end_x}")
        if self.step <= 0:
            logger.error(f"invalid step: {self.step}")
            raise ScanConfigError(f"step must be > 0, got {self.step}")
        if self.root_tol <= 0 or self.y_bracket <= 0:
            logger.error(f"invalid tolerance or bracket: {self.root_tol}, {self.y_bracket}")
            raise ScanConfigError("root_tol and y_bracket must be > 0")
        if self.max_iterations < 1:
            logger.error(f"invalid iteration cap: {self.max_iterations}")
            raise ScanConfigError(f"max_iterations must be >= 1, got {self.max_iterations}")

    @property
    def n_columns(self) -> int:
        # slack absorbs the rounding of (end - start) / step
        return math.floor((self.end_x - self.start_x) / self.step + 1e-9) + 1

    def column_x(self, index: int) -> float:
        return self.start_x + index * self.step

@dataclass(frozen = True)
class ScanColumn:
    """Feasible interval of one column; `None` extremes for empty columns."""

    x: float
    min_y: float | None
    max_y: float | None

@dataclass(frozen = True)
class ScanResult:
    """
        Class representing the outcome of the sweep.
    """

    area: float
    """Accumulated area."""

    perimeter: float
    """Accumulated perimeter, measured with the metric of the configuration."""

    columns_hit: int
    """Number of nonempty columns."""

    columns_empty: int
    """Number of empty columns."""

    trace: tuple[ScanColumn, ...] = field(default = (), repr = False)
    """Columns in sweep order."""

    @property
    def columns(self) -> pd.DataFrame:
        """Trace of the sweep with columns `x`, `min_y`, `max_y` (`NaN` for empty columns)."""
        return pd.DataFrame(
            [(c.x, c.min_y, c.max_y) for c in self.trace],
            columns = ["x", "min_y", "max_y"],
            dtype = float
        )

def _check_metric(metric: Metric) -> None:
    if metric.kind not in (MetricKind.TAXICAB, MetricKind.EUCLIDEAN):
        logger.error(f"unsupported metric: {metric}")
        raise UnsupportedMetricError(f"the sweep measures only with taxicab or euclidean metrics, got {metric}")

def trapezoid_correction(Y1: float, Y2: float, step: float) -> float:
    """
        Area of the triangle between two consecutive column extremes,
        `(Y1 - Y2) * step / 2`, sign included.
    """
    return (Y1 - Y2) * step / 2

def column_distance(Y: float, oldY: float, step: float, m: Metric) -> float:
    """
        Length of the boundary piece joining the extremes of two consecutive
        columns: `|Y - oldY| + |step|` in the taxicab metric,
        `sqrt((Y - oldY)^2 + step^2)` in the Euclidean one.

        Raises:
            UnsupportedMetricError: for Minkowski metrics other than taxicab and Euclidean.
    """
    _check_metric(m)
    if m.kind == MetricKind.TAXICAB:
        return abs(Y - oldY) + abs(step)
    return math.sqrt((Y - oldY) ** 2 + step ** 2)

def _ternary_minimum(f, lo: float, hi: float, tol: float, max_iterations: int) -> float:
    # f convex: the minimizer stays in the kept two thirds
    for _ in range(max_iterations):
        if hi - lo <= tol:
            break
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if f(m1) <= f(m2):
            hi = m2
        else:
            lo = m1
    return (lo + hi) / 2

def _bisect_boundary(f, inside: float, outside: float, tol: float, max_iterations: int) -> float:
    # f(inside) <= 0 < f(outside); the feasible end is returned
    for _ in range(max_iterations):
        if abs(outside - inside) <= tol:
            break
        mid = (inside + outside) / 2
        if f(mid) <= 0:
            inside = mid
        else:
            outside = mid
    return inside

def find_y_extremes(
    region: ImplicitRegion,
    x: float,
    bracket: float = DEFAULT_TOLERANCES.y_bracket,
    tol: float = DEFAULT_TOLERANCES.root,
    max_iterations: int = DEFAULT_TOLERANCES.max_iterations,
    exact: bool = False
) -> tuple[float, float] | None:
    """
        Finds the feasible interval of the column `x`.

        A feasible point is located with a ternary search of the minimum of
        `f(x, .)` over `[-bracket, bracket]`, then the two ends are found by
        bisection outward from it. A column whose minimum of `f` is within
        `region.y_lipschitz * tol` of zero is a tip of the region and
        returns the single point `(y0, y0)`.

        Parameters:
            region: region with the y-interval property.
            x: abscissa of the column.
            bracket: half-width of the y window.
            tol: width below which the searches stop.
            max_iterations: iteration cap of each search.
            exact: flag to use the exact slice of the region when available.

        Returns:
            `(min_y, max_y)`, or `None` if the column is empty.

        Raises:
            BracketExceededError: if `f` is still feasible at `-bracket` or `+bracket`.
    """
    if exact and region.supports_exact_slice:
        return region.exact_slice(x)

    def f(y: float) -> float:
        return region.feasible(Point(x, y))

    y0 = _ternary_minimum(f, -bracket, bracket, tol, max_iterations)
    f0 = f(y0)
    # y0 is within tol of the minimizer, so a single-point column has f0 <= L * tol
    if f0 > region.y_lipschitz * tol:
        return None

    if f(-bracket) <= 0 or f(bracket) <= 0:
        logger.error(f"region reaches the y bracket {bracket} at x = {x}")
        raise BracketExceededError(f"the column x = {x} is feasible at the ends of the y bracket {bracket}")

    if f0 > 0:
        logger.debug(f"single-point column at x = {x}, y = {y0}")
        return (y0, y0)

    min_y = _bisect_boundary(f, y0, -bracket, tol, max_iterations)
    max_y = _bisect_boundary(f, y0, bracket, tol, max_iterations)
    return (min_y, max_y)

def scan_area_perimeter(region: ImplicitRegion, cfg: ScanConfig) -> ScanResult:
    """
        Estimates the area and the perimeter of `region` sweeping vertical
        columns from left to right.

        For each nonempty column with extremes `minY`, `maxY`, after the
        previous column `oldMinY`, `oldMaxY`:

        - `a += (maxY - minY) * step + t(maxY, oldMaxY) + t(oldMinY, minY)`;
        - `p += dist(maxY, oldMaxY) + dist(minY, oldMinY)`;

        with `t` the [`trapezoid_correction`][taxicurve.scan.sweep.trapezoid_correction]
        and `dist` the [`column_distance`][taxicurve.scan.sweep.column_distance].
        The first nonempty column adds its height `maxY - minY` to the
        perimeter in place of the increments, the last one adds it again
        to close the boundary.

        Empty columns before or after the region are skipped and reported
        with a `LooseScanBoundsWarning`.

        Parameters:
            region: region with the y-interval property, e.g.
                [`SumEllipseRegion`][taxicurve.scan.region.SumEllipseRegion].
            cfg: sweep settings.

        Returns:
            the accumulated area and perimeter with the column trace.

        Raises:
            UnsupportedMetricError: if `cfg.metric` is neither taxicab nor Euclidean.
            ScanEmptyRegionError: if every column is empty.
            BracketExceededError: if a column exceeds the y bracket.
    """
    logger.debug("start")
    _check_metric(cfg.metric)
    step = cfg.step

    a = 0.0
    p = 0.0
    old_min_y = old_max_y = 0.0
    started = False
    ended = False
    hit = 0
    trace = []

    for index in range(cfg.n_columns):
        x = cfg.column_x(index)
        extremes = find_y_extremes(
            region, x,
            bracket = cfg.y_bracket,
            tol = cfg.root_tol,
            max_iterations = cfg.max_iterations,
            exact = cfg.exact_slices
        )
        if extremes is None:
            trace.append(ScanColumn(x, None, None))
            if started:
                ended = True
            continue

        min_y, max_y = extremes
        trace.append(ScanColumn(x, min_y, max_y))
        if ended:
            logger.warning(f"nonempty column at x = {x} after the end of the region, ignored")
            continue

        hit += 1
        if not started:
            p = p + (max_y - min_y)
            started = True
        else:
            p = p + column_distance(max_y, old_max_y, step, cfg.metric) + column_distance(min_y, old_min_y, step, cfg.metric)
            a = a + (max_y - min_y) * step + trapezoid_correction(max_y, old_max_y, step) + trapezoid_correction(old_min_y, min_y, step)
        old_min_y, old_max_y = min_y, max_y

    if not started:
        logger.error("every column of the sweep is empty")
        raise ScanEmptyRegionError(f"every column in [{cfg.start_x}, {cfg.end_x}] is empty")

    # closing side of the last nonempty column
    p = p + (old_max_y - old_min_y)

    empty = len(trace) - hit
    if empty > 0:
        logger.warning(f"empty columns: {empty}")
        warnings.warn(f"{empty} empty columns, the sweep bounds are wider than the region", LooseScanBoundsWarning)

    result = ScanResult(area = a, perimeter = p, columns_hit = hit, columns_empty = empty, trace = tuple(trace))
    logger.info(f"scan: area {result.area}, perimeter {result.perimeter}, columns {hit}/{len(trace)}")

    logger.debug("end")
    return result
