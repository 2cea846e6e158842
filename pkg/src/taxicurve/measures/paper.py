import math
import logging
from numbers import Real
from fractions import Fraction
from dataclasses import dataclass

from ..core.exceptions import InvalidArgumentError
from ..core.metric import Point, Metric, MetricKind, TAXICAB
from ..conic.classifier import EllipseVariant, classify_ellipse
from .exceptions import NoMeasureError, DegenerateInputError

# set logging
logger = logging.getLogger(__name__)

TAXICAB_PI = 4
"""Ratio between the perimeter and the diameter of a taxicab circle, `8r / 2r`."""

CANONICAL_TRIFOCAL_FOCI = (Point(-1.0, 0.0), Point(1.0, 0.0), Point(0.0, 0.0))
"""Foci `F1(-1, 0)`, `F2(1, 0)`, `F3(0, 0)` for which the trifocal formulas hold."""

CANONICAL_TRIFOCAL_S0 = 2
"""Minimal focal sum of the canonical trifocal foci."""

@dataclass(frozen = True)
class Measure:
    """
        Class representing the area and the perimeter of a curve.

        Values keep the numeric type of the input: `Fraction` inputs
        give exact `Fraction` measures.
    """

    area: Real
    """Area, nonnegative."""

    perimeter: Real
    """Perimeter, nonnegative."""

    perimeter_metric: Metric = TAXICAB
    """Metric used to measure the perimeter."""

    def __post_init__(self) -> None:
        for name, value in (("area", self.area), ("perimeter", self.perimeter)):
            if not math.isfinite(value) or value < 0:
                logger.error(f"invalid {name}: {value}")
                raise InvalidArgumentError(f"{name} must be finite and nonnegative, got {value}")

def _exact(value: Real) -> Real:
    # ints are promoted so that divisions stay rational
    if isinstance(value, int):
        return Fraction(value)
    return value

def metric_pi(metric: Metric) -> float:
    """
        Ratio between the perimeter and the diameter of the unit circle of
        `metric`, measured in the same metric: `4` for taxicab, `pi` for Euclidean.

        Raises:
            InvalidArgumentError: for other Minkowski metrics.
    """
    match metric.kind:
        case MetricKind.TAXICAB:
            return float(TAXICAB_PI)
        case MetricKind.EUCLIDEAN:
            return math.pi
        case _:
            logger.error(f"no circle ratio available for {metric}")
            raise InvalidArgumentError(f"circle ratio available only for taxicab and euclidean metrics, got {metric}")

def circle_measures_paper(r: Real) -> Measure:
    """
        Printed measures of the taxicab circle of radius `r`:
        area `4 r^2` and perimeter `8 r`.

        Raises:
            InvalidArgumentError: if `r <= 0`.
    """
    if not math.isfinite(r) or r <= 0:
        logger.error(f"invalid radius: {r}")
        raise InvalidArgumentError(f"radius must be a finite real > 0, got {r}")
    r = _exact(r)
    return Measure(area = 4 * r ** 2, perimeter = 8 * r)

def two_focus_measures_paper(F1: Point, F2: Point, gamma: Real) -> Measure:
    """
        Printed measures of the two-foci taxicab ellipse. With
        `delta = d1(F1, F2)` and `2 alpha = -gamma - delta`:

        - hexagon: area `2 alpha (-gamma)`, perimeter `2 (-gamma + 2 alpha)`;
        - octagon: area `(|x1 - x2| + 2 alpha) (|y1 - y2| + 2 alpha)`,
            perimeter `2 (|x1 - x2| + 2 alpha) + 2 (|y1 - y2| + 2 alpha)`;
        - degenerate rectangle: area `|x1 - x2| |y1 - y2|`, perimeter `2 delta`.

        The formulas are evaluated as printed; see
        [`reconcile`][taxicurve.measures.oracle.reconcile] for the comparison
        with the exact polygon.

        Raises:
            InvalidConicError: if `gamma > 0`.
            NoMeasureError: if the ellipse is empty (`-gamma < delta`).
    """
    logger.debug("start")
    classification = classify_ellipse(F1, F2, gamma)

    dx = abs(_exact(F1.x) - _exact(F2.x))
    dy = abs(_exact(F1.y) - _exact(F2.y))
    delta = dx + dy
    level = -_exact(gamma)
    two_alpha = level - delta
    logger.debug(f"2 alpha: {two_alpha}")

    match classification.variant:
        case EllipseVariant.HEXAGON:
            measure = Measure(area = two_alpha * level, perimeter = 2 * (level + two_alpha))
        case EllipseVariant.OCTAGON:
            measure = Measure(
                area = (dx + two_alpha) * (dy + two_alpha),
                perimeter = 2 * (dx + two_alpha) + 2 * (dy + two_alpha)
            )
        case EllipseVariant.DEGENERATE_RECTANGLE:
            measure = Measure(area = dx * dy, perimeter = 2 * delta)
        case _:
            logger.error(f"no formula for class {classification.variant.value}")
            raise NoMeasureError(f"no area/perimeter formula for an ellipse of class '{classification.variant.value}'")

    logger.info(f"paper measures ({classification.variant.value}): {measure.area}, {measure.perimeter}")
    logger.debug("end")
    return measure

def trifocal_measures_paper(S: Real) -> Measure:
    """
        Printed measures of the taxicab trifocal ellipse with foci
        `(-1, 0)`, `(1, 0)`, `(0, 0)`:

        - area `4/3 (S - 2)^2` for `2 < S < 3`, `4/3 (S (S/3 - 1) + 1)` for `S >= 3`;
        - perimeter `16/3 (S - 2)` for `2 < S < 3`, `8/3 (S - 1)` for `S >= 3`.

        Pass a `Fraction` (or an `int`) to get exact values.

        Raises:
            InvalidArgumentError: if `S` is not finite.
            DegenerateInputError: if `S <= 2`.
    """
    if not math.isfinite(S):
        logger.error(f"non-finite focal sum: {S}")
        raise InvalidArgumentError(f"focal sum must be finite, got {S}")
    if S <= CANONICAL_TRIFOCAL_S0:
        logger.error(f"focal sum {S} <= {CANONICAL_TRIFOCAL_S0}")
        raise DegenerateInputError(f"the trifocal ellipse degenerates for S <= {CANONICAL_TRIFOCAL_S0}, got {S}")

    S = _exact(S)
    if S < 3:
        area = Fraction(4, 3) * (S - 2) ** 2
        perimeter = Fraction(16, 3) * (S - 2)
    else:
        area = Fraction(4, 3) * (S * (S / 3 - 1) + 1)
        perimeter = Fraction(8, 3) * (S - 1)
    return Measure(area = area, perimeter = perimeter)
