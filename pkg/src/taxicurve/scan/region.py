import math
import logging
from dataclasses import dataclass
from abc import ABCMeta, abstractmethod

from ..core.exceptions import InvalidArgumentError
from ..core.metric import Point, Metric, MetricKind, TAXICAB, minkowski_distance
from ..conic.model import ConicSpec, separable_foci
from ..polygonize.profile import PiecewiseLinearConvex, abs_sum_profile, sublevel_interval
from .exceptions import ScanEmptyRegionError

# set logging
logger = logging.getLogger(__name__)

class ImplicitRegion(metaclass = ABCMeta):
    """
        Base class of the regions `{P : f(P) <= 0}` that can be swept column
        by column.

        The sweep requires the y-interval property: for every fixed `x` the
        feasible `y` form an empty set or a single closed interval. The
        property holds for every convex region.
    """

    @abstractmethod
    def feasible(self, P: Point) -> float:
        """Signed function `f`; the region is `{f <= 0}`."""
        raise NotImplementedError

    @property
    def y_interval_property(self) -> bool:
        return True

    @property
    def y_lipschitz(self) -> float:
        """Lipschitz constant of `f` along a column; it scales the feasibility tolerance of single-point columns."""
        return 1.0

    @property
    def supports_exact_slice(self) -> bool:
        """Flag to indicate if `exact_slice` is available."""
        return False

    def exact_slice(self, x: float) -> tuple[float, float] | None:
        """
            Returns the feasible interval of the column `x` without root
            finding, `None` if the column is empty.
        """
        raise NotImplementedError(f"{type(self).__name__} has no exact column slice")

@dataclass(frozen = True)
class SumEllipseRegion(ImplicitRegion):
    """
        Region `{P : sum_i d(P, F_i) <= S}` for the taxicab, Euclidean or
        Minkowski distance `d`.

        The signed function is `f = sum_i d(P, F_i) - S` with `S > 0`.
        In the taxicab metric the region is separable and its columns are
        solved exactly on the profile of the ordinates.
    """

    foci: tuple[Point, ...]
    """Foci, at least one."""

    S: float
    """Focal sum."""

    metric: Metric = TAXICAB
    """Metric of the focal distances."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "foci", tuple(self.foci))
        if len(self.foci) == 0:
            logger.error("empty focus list")
            raise InvalidArgumentError("a region requires at least one focus")
        if not math.isfinite(self.S) or self.S <= 0:
            logger.error(f"invalid focal sum: {self.S}")
            raise InvalidArgumentError(f"focal sum must be a finite real > 0, got {self.S}")

    @classmethod
    def from_spec(cls, spec: ConicSpec, metric: Metric = TAXICAB) -> "SumEllipseRegion":
        """Builds the region enclosed by a circle, a two-foci ellipse or a sum-ellipse."""
        foci, S = separable_foci(spec)
        return cls(tuple(foci), S, metric)

    @property
    def x_profile(self) -> PiecewiseLinearConvex:
        return abs_sum_profile([focus.x for focus in self.foci])

    @property
    def y_profile(self) -> PiecewiseLinearConvex:
        return abs_sum_profile([focus.y for focus in self.foci])

    def feasible(self, P: Point) -> float:
        total = 0.0
        for focus in self.foci:
            total = total + minkowski_distance(P, focus, self.metric)
        return total - self.S

    @property
    def y_lipschitz(self) -> float:
        # every Minkowski distance is 1-Lipschitz along y
        return float(len(self.foci))

    @property
    def supports_exact_slice(self) -> bool:
        return self.metric.kind == MetricKind.TAXICAB

    def exact_slice(self, x: float) -> tuple[float, float] | None:
        if not self.supports_exact_slice:
            return super().exact_slice(x)
        return sublevel_interval(self.y_profile, self.S - self.x_profile(x))

def region_x_extent(region: SumEllipseRegion) -> tuple[float, float]:
    """
        Returns an interval of abscissas that contains the region.

        In the taxicab metric the interval is exact, `{x : g(x) + min h <= S}`
        with `g` and `h` the profiles of the foci. For the other metrics every
        point of the region is within `S` of each focus along `x`, so the
        interval is `[max x_i - S, min x_i + S]`.

        Raises:
            ScanEmptyRegionError: if the interval is empty.
    """
    if region.metric.kind == MetricKind.TAXICAB:
        extent = sublevel_interval(region.x_profile, region.S - region.y_profile.minimum)
    else:
        lo = max(focus.x for focus in region.foci) - region.S
        hi = min(focus.x for focus in region.foci) + region.S
        extent = (lo, hi) if lo <= hi else None

    if extent is None:
        logger.error(f"empty region for S = {region.S}")
        raise ScanEmptyRegionError(f"the region is empty for S = {region.S}")
    logger.debug(f"x extent: {extent}")
    return extent
