import math
import logging
from enum import Enum
from dataclasses import dataclass

from .exceptions import InvalidArgumentError, InvalidLineError

# set logging
logger = logging.getLogger(__name__)

def _check_finite(*values: float, what: str) -> None:
    if not all(math.isfinite(value) for value in values):
        logger.error(f"non-finite {what}: {values}")
        raise InvalidArgumentError(f"non-finite {what}: {values}")

@dataclass(frozen = True)
class Point:
    """
        Class representing a location in the plane.

        Both coordinates must be finite, otherwise the constructor
        raises `InvalidArgumentError`.
    """

    x: float
    """Abscissa of the point."""

    y: float
    """Ordinate of the point."""

    def __post_init__(self) -> None:
        _check_finite(self.x, self.y, what = "point coordinates")

    def translate(self, dx: float, dy: float) -> "Point":
        """Returns the point moved by the vector `(dx, dy)`."""
        return Point(self.x + dx, self.y + dy)

    def scale(self, s: float) -> "Point":
        """Returns the point with both coordinates multiplied by `s`."""
        return Point(self.x * s, self.y * s)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)

@dataclass(frozen = True)
class Line:
    """
        Class representing the line `ax + by + c = 0`.

        The coefficients `a` and `b` cannot be both zero; a degenerate line
        is rejected with `InvalidLineError` instead of producing infinite
        distances later on.
    """

    a: float
    """Coefficient of `x`."""

    b: float
    """Coefficient of `y`."""

    c: float
    """Constant term."""

    def __post_init__(self) -> None:
        _check_finite(self.a, self.b, self.c, what = "line coefficients")
        if self.a == 0 and self.b == 0:
            logger.error("degenerate line, a = b = 0")
            raise InvalidLineError("line coefficients a and b cannot be both zero")

    @property
    def norm_taxicab(self) -> float:
        """Value `max(|a|, |b|)`, the denominator of the taxicab point-line distance."""
        return max(abs(self.a), abs(self.b))

    @property
    def slope_ratio(self) -> float:
        """Value `|-a/b|`; it is `math.inf` for vertical lines (`b = 0`)."""
        if self.b == 0:
            return math.inf
        return abs(-self.a / self.b)

    def evaluate(self, point: Point) -> float:
        """Returns `ax + by + c` at `point`."""
        return self.a * point.x + self.b * point.y + self.c

    def translate(self, dx: float, dy: float) -> "Line":
        """Returns the line moved by the vector `(dx, dy)`."""
        return Line(self.a, self.b, self.c - self.a * dx - self.b * dy)

    def scale(self, s: float) -> "Line":
        """Returns the image of the line under the homothety `P -> s * P`, `s > 0`."""
        return Line(self.a, self.b, self.c * s)

class MetricKind(str, Enum):
    """
        Enumeration of the metric families supported by the library.
    """

    TAXICAB = "taxicab"
    """Minkowski metric of order 1."""

    EUCLIDEAN = "euclidean"
    """Minkowski metric of order 2."""

    MINKOWSKI = "minkowski"
    """Minkowski metric of generic order `k >= 1`."""

@dataclass(frozen = True)
class Metric:
    """
        Class representing a Minkowski metric of order `k`:

        `d_k(A, B) = (|x_A - x_B|^k + |y_A - y_B|^k)^(1/k)`

        Use the module constants `TAXICAB` and `EUCLIDEAN`, or `Metric.from_order(k)`
        that normalizes `k = 1` and `k = 2` to these two variants.
    """

    kind: MetricKind
    """Family of the metric."""

    k: float
    """Order of the metric."""

    def __post_init__(self) -> None:
        if not math.isfinite(self.k) or self.k < 1:
            logger.error(f"invalid Minkowski order: {self.k}")
            raise InvalidArgumentError(f"Minkowski order must be a finite real >= 1, got {self.k}")

    @classmethod
    def from_order(cls, k: float) -> "Metric":
        """
            Function to build a metric from its order.

            Parameters:
                k: order of the metric, `k >= 1`.

            Returns:
                `TAXICAB` for `k = 1`, `EUCLIDEAN` for `k = 2`, a `MINKOWSKI` metric otherwise.

            Raises:
                InvalidArgumentError: if `k < 1` or not finite.
        """
        if k == 1:
            return TAXICAB
        if k == 2:
            return EUCLIDEAN
        return cls(MetricKind.MINKOWSKI, float(k))

    @classmethod
    def parse(cls, value: str) -> "Metric":
        """
            Function to parse a metric from a string; admitted values are
            `taxicab`, `euclidean` and `minkowski:<k>`.

            Raises:
                InvalidArgumentError: if the string does not represent a metric.
        """
        text = value.strip().lower()
        if text == MetricKind.TAXICAB.value:
            return TAXICAB
        if text == MetricKind.EUCLIDEAN.value:
            return EUCLIDEAN
        if text.startswith(MetricKind.MINKOWSKI.value + ":"):
            try:
                k = float(text.split(":", 1)[1])
            except ValueError:
                logger.error(f"invalid metric order in '{value}'")
                raise InvalidArgumentError(f"invalid metric: {value}")
            return cls.from_order(k)
        logger.error(f"unknown metric '{value}'")
        raise InvalidArgumentError(f"unknown metric: {value}")

    def __str__(self) -> str:
        if self.kind == MetricKind.MINKOWSKI:
            return f"{self.kind.value}:{self.k:g}"
        return self.kind.value

TAXICAB = Metric(MetricKind.TAXICAB, 1.0)
"""Taxicab (Manhattan, L1) metric."""

EUCLIDEAN = Metric(MetricKind.EUCLIDEAN, 2.0)
"""Euclidean (L2) metric."""

def taxicab_distance(A: Point, B: Point) -> float:
    """Taxicab distance `|x_A - x_B| + |y_A - y_B|`."""
    return abs(A.x - B.x) + abs(A.y - B.y)

def euclidean_distance(A: Point, B: Point) -> float:
    """Euclidean distance between `A` and `B`."""
    return math.hypot(A.x - B.x, A.y - B.y)

def minkowski_distance(A: Point, B: Point, metric: Metric = TAXICAB) -> float:
    """
        Computes the Minkowski distance of order `metric.k` between two points.

        Parameters:
            A: first point.
            B: second point.
            metric: metric used to measure the distance; by default taxicab.

        Returns:
            nonnegative distance between `A` and `B`.
    """
    match metric.kind:
        case MetricKind.TAXICAB:
            return taxicab_distance(A, B)
        case MetricKind.EUCLIDEAN:
            return euclidean_distance(A, B)
        case _:
            dx = abs(A.x - B.x)
            dy = abs(A.y - B.y)
            scale = max(dx, dy)
            if scale == 0:
                return 0.0
            # normalized to avoid overflow for large k
            return scale * ((dx / scale) ** metric.k + (dy / scale) ** metric.k) ** (1 / metric.k)

def point_line_distance_taxicab(P: Point, line: Line) -> float:
    """
        Taxicab distance of a point from a line:

        `d_1(P, l) = |a x_p + b y_p + c| / max(|a|, |b|)`

        Parameters:
            P: point.
            line: line `ax + by + c = 0`.

        Returns:
            nonnegative distance, zero iff `P` lies on `line`.
    """
    return abs(line.evaluate(P)) / line.norm_taxicab
