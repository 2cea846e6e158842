import math
import logging
from enum import Enum
from numbers import Real
from dataclasses import dataclass

import numpy as np

from ..core.exceptions import InvalidArgumentError
from ..core.metric import Point, Metric, MetricKind, TAXICAB
from ..core.schema import DEFAULT_TOLERANCES
from ..conic.classifier import EllipseVariant, classify_ellipse
from ..polygonize.profile import abs_sum_profile, sublevel_interval
from ..polygonize.polygon import (
    Polygon,
    DegenerateSet,
    DegenerateKind,
    shoelace_area,
    polygon_perimeter,
    sum_ellipse_polygon
)
from ..polygonize.exceptions import EmptyRegionError
from .paper import (
    Measure,
    CANONICAL_TRIFOCAL_FOCI,
    circle_measures_paper,
    two_focus_measures_paper,
    trifocal_measures_paper
)

# set logging
logger = logging.getLogger(__name__)

MONTE_CARLO_CHUNK = 250_000
"""Number of samples drawn at once by `monte_carlo_area`."""

@dataclass(frozen = True)
class FermatResult:
    """
        Class representing the minimizers of the sum of taxicab distances
        from a list of foci.
    """

    minimizing_set: DegenerateSet
    """Product of the median intervals of the abscissas and of the ordinates."""

    S0: float
    """Minimal focal sum, attained at every point of `minimizing_set`."""

def fermat_point_taxicab(foci: list[Point]) -> FermatResult:
    """
        Computes the taxicab Fermat-Torricelli set of `foci`.

        The focal sum is separable, so its minimizers are the points whose
        abscissa is a median of the focus abscissas and whose ordinate is a
        median of the focus ordinates.

        Parameters:
            foci: nonempty list of foci.

        Returns:
            the minimizing set (point, segment or rectangle) and `S0`.

        Raises:
            EmptyProfileError: if `foci` is empty.
    """
    logger.debug("start")

    g = abs_sum_profile([focus.x for focus in foci])
    h = abs_sum_profile([focus.y for focus in foci])
    result = FermatResult(
        minimizing_set = DegenerateSet.from_box(*g.median_interval, *h.median_interval),
        S0 = g.minimum + h.minimum
    )
    logger.info(f"fermat set: {result.minimizing_set.kind.value}, S0 = {result.S0}")

    logger.debug("end")
    return result

def measures_oracle(foci: list[Point], S: float) -> Measure:
    """
        Area and taxicab perimeter of the region `{P : sum_i d1(P, F_i) <= S}`
        computed on the exact polygon: shoelace area and sum of the taxicab
        edge lengths.

        When `S = S0` the region is the set of minimizers and the measures of
        its rectangle are returned, `|dx| |dy|` and `2 (|dx| + |dy|)`.

        Raises:
            EmptyRegionError: if `S < S0`.
    """
    logger.debug("start")

    shape = sum_ellipse_polygon(foci, S)
    match shape:
        case Polygon():
            measure = Measure(area = shoelace_area(shape), perimeter = polygon_perimeter(shape, TAXICAB))
        case DegenerateSet(kind = DegenerateKind.EMPTY):
            logger.error(f"empty region for S = {S}")
            raise EmptyRegionError(f"the region is empty, the focal sum {S} is below the minimum")
        case _:
            measure = Measure(area = shape.area, perimeter = shape.taxicab_perimeter)

    logger.info(f"oracle measures: {measure.area}, {measure.perimeter}")
    logger.debug("end")
    return measure

def _sampling_box(foci: list[Point], S: float, metric: Metric) -> tuple[float, float, float, float]:
    # d1 <= 2^(1 - 1/k) dk, so the dk region lies in the taxicab region of level 2^(1 - 1/k) S
    level = S * 2 ** (1 - 1 / metric.k)
    g = abs_sum_profile([focus.x for focus in foci])
    h = abs_sum_profile([focus.y for focus in foci])
    x_range = sublevel_interval(g, level - h.minimum)
    y_range = sublevel_interval(h, level - g.minimum)
    if x_range is None or y_range is None:
        logger.error(f"empty region for S = {S}")
        raise EmptyRegionError(f"the region is empty, the focal sum {S} is below the minimum")
    return (x_range[0], y_range[0], x_range[1], y_range[1])

def _focal_sum_samples(foci: list[Point], x: np.ndarray, y: np.ndarray, metric: Metric) -> np.ndarray:
    total = np.zeros_like(x)
    for focus in foci:
        dx = np.abs(x - focus.x)
        dy = np.abs(y - focus.y)
        match metric.kind:
            case MetricKind.TAXICAB:
                total += dx + dy
            case MetricKind.EUCLIDEAN:
                total += np.hypot(dx, dy)
            case _:
                total += (dx ** metric.k + dy ** metric.k) ** (1 / metric.k)
    return total

def monte_carlo_area(
    foci: list[Point],
    S: float,
    samples: int = 1_000_000,
    seed: int = 0,
    metric: Metric = TAXICAB
) -> float:
    """
        Estimates the area of `{P : sum_i d(P, F_i) <= S}` by uniform sampling.

        The samples are drawn from a box that contains the region, the hit
        rate is multiplied by the area of the box. The estimate is
        independent of the polygon construction and is used to confirm the
        oracle areas.

        Parameters:
            foci: nonempty list of foci.
            S: focal sum.
            samples: number of samples, at least 1.
            seed: seed of `numpy.random.default_rng`; equal seeds give equal estimates.
            metric: metric of the focal distances.

        Returns:
            estimated area.

        Raises:
            InvalidArgumentError: if `samples < 1`.
            EmptyRegionError: if the region is empty.
    """
    logger.debug("start")
    if samples < 1:
        logger.error(f"invalid number of samples: {samples}")
        raise InvalidArgumentError(f"samples must be >= 1, got {samples}")

    x_min, y_min, x_max, y_max = _sampling_box(foci, S, metric)
    box_area = (x_max - x_min) * (y_max - y_min)
    logger.debug(f"sampling box: {(x_min, y_min, x_max, y_max)}")
    if box_area == 0:
        return 0.0

    rng = np.random.default_rng(seed)
    hits = 0
    remaining = samples
    while remaining > 0:
        size = min(remaining, MONTE_CARLO_CHUNK)
        x = rng.uniform(x_min, x_max, size)
        y = rng.uniform(y_min, y_max, size)
        hits += int(np.count_nonzero(_focal_sum_samples(foci, x, y, metric) <= S))
        remaining -= size

    area = box_area * hits / samples
    logger.info(f"monte carlo area: {area} ({hits}/{samples} hits)")

    logger.debug("end")
    return area

class ReconcileFamily(str, Enum):
    """
        Families for which both printed formulas and an oracle exist.
    """

    CIRCLE = "circle"
    ELLIPSE = "ellipse"
    TRIFOCAL = "trifocal"

@dataclass(frozen = True)
class ReconciliationReport:
    """
        Class pairing the printed measures with the oracle measures of the same curve.
    """

    family: ReconcileFamily
    """Curve family."""

    paper: Measure
    """Measures from the printed formulas."""

    oracle: Measure
    """Measures of the exact polygon."""

    area_abs_diff: float
    """Value `|paper.area - oracle.area|`."""

    perimeter_abs_diff: float
    """Value `|paper.perimeter - oracle.perimeter|`."""

    area_agrees: bool
    """Flag set when `area_abs_diff` is within the reconcile tolerance."""

    perimeter_agrees: bool
    """Flag set when `perimeter_abs_diff` is within the reconcile tolerance."""

    bbox_area_gap: float | None = None
    """
        For hexagons and octagons, the gap `2 alpha^2` between the area of the
        bounding box of the polygon and its shoelace area; `None` otherwise.
    """

    @property
    def agrees(self) -> bool:
        return self.area_agrees and self.perimeter_agrees

def _require(name: str, value: object) -> None:
    if value is None:
        logger.error(f"missing parameter '{name}'")
        raise InvalidArgumentError(f"parameter '{name}' is required")

def reconcile(
    family: ReconcileFamily | str,
    *,
    r: Real | None = None,
    center: Point = Point(0.0, 0.0),
    F1: Point | None = None,
    F2: Point | None = None,
    gamma: Real | None = None,
    S: Real | None = None
) -> ReconciliationReport:
    """
        Compares the printed measures of a curve with the measures of its exact polygon.

        Disagreements are reported, never corrected.

        Parameters:
            family: `circle` (needs `r`, optional `center`), `ellipse`
                (needs `F1`, `F2`, `gamma`) or `trifocal` (needs `S`, canonical foci).

        Returns:
            the report with the absolute differences and the agreement flags.

        Raises:
            InvalidArgumentError: if the family is unknown or a parameter is missing.
    """
    logger.debug("start")
    try:
        family = ReconcileFamily(family)
    except ValueError:
        logger.error(f"unknown family '{family}'")
        raise InvalidArgumentError(f"no reconciliation available for family '{family}'")

    bbox_area_gap = None
    match family:
        case ReconcileFamily.CIRCLE:
            _require("r", r)
            paper = circle_measures_paper(r) # type: ignore (checked above)
            oracle = measures_oracle([center], float(r)) # type: ignore (checked above)
        case ReconcileFamily.ELLIPSE:
            _require("F1", F1)
            _require("F2", F2)
            _require("gamma", gamma)
            paper = two_focus_measures_paper(F1, F2, gamma) # type: ignore (checked above)
            oracle = measures_oracle([F1, F2], -float(gamma)) # type: ignore (checked above)
            if classify_ellipse(F1, F2, gamma).variant in (EllipseVariant.HEXAGON, EllipseVariant.OCTAGON): # type: ignore (checked above)
                alpha = (-float(gamma) - abs(F1.x - F2.x) - abs(F1.y - F2.y)) / 2 # type: ignore (checked above)
                bbox_area_gap = 2 * alpha ** 2
        case ReconcileFamily.TRIFOCAL:
            _require("S", S)
            paper = trifocal_measures_paper(S) # type: ignore (checked above)
            oracle = measures_oracle(list(CANONICAL_TRIFOCAL_FOCI), float(S)) # type: ignore (checked above)

    area_abs_diff = abs(float(paper.area) - float(oracle.area))
    perimeter_abs_diff = abs(float(paper.perimeter) - float(oracle.perimeter))
    tol = DEFAULT_TOLERANCES.reconcile
    report = ReconciliationReport(
        family = family,
        paper = paper,
        oracle = oracle,
        area_abs_diff = area_abs_diff,
        perimeter_abs_diff = perimeter_abs_diff,
        area_agrees = area_abs_diff <= tol,
        perimeter_agrees = perimeter_abs_diff <= tol,
        bbox_area_gap = bbox_area_gap
    )

    if not report.area_agrees:
        logger.info(f"{family.value}: area disagreement, paper {paper.area} vs oracle {oracle.area}")
    if not report.perimeter_agrees:
        logger.info(f"{family.value}: perimeter disagreement, paper {paper.perimeter} vs oracle {oracle.perimeter}")

    logger.debug("end")
    return report
