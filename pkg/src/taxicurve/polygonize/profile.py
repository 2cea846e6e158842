import math
import bisect
import logging
from dataclasses import dataclass

from .exceptions import EmptyProfileError

# set logging
logger = logging.getLogger(__name__)

@dataclass(frozen = True)
class PiecewiseLinearConvex:
    """
        Exact representation of the convex function

        `g(t) = sum_i |t - c_i|`

        The function is linear between consecutive breakpoints (the sorted
        input values) with slopes `-n, -n + 2, ..., n - 2, n`, and its
        minimum is attained on the median interval.
    """

    breakpoints: tuple[float, ...]
    """Input values in ascending order (repetitions kept)."""

    values: tuple[float, ...]
    """Value of the function at each breakpoint."""

    @property
    def n(self) -> int:
        """Number of input values."""
        return len(self.breakpoints)

    @property
    def median_interval(self) -> tuple[float, float]:
        """Interval where the minimum is attained."""
        n = self.n
        if n % 2 == 1:
            median = self.breakpoints[n // 2]
            return (median, median)
        return (self.breakpoints[n // 2 - 1], self.breakpoints[n // 2])

    @property
    def minimum(self) -> float:
        """Minimum value of the function."""
        return self(self.median_interval[0])

    def slope_after(self, index: int) -> int:
        """Slope of the piece starting at the breakpoint `index` (`-1` means left of all breakpoints)."""
        return 2 * (index + 1) - self.n

    def __call__(self, t: float) -> float:
        """
            Evaluates the function at `t` by linear interpolation between
            the breakpoints, with slope `-n` / `n` outside.
        """
        points = self.breakpoints
        n = self.n
        if t <= points[0]:
            return self.values[0] + n * (points[0] - t)
        if t >= points[-1]:
            return self.values[-1] + n * (t - points[-1])

        # last breakpoint <= t
        i = bisect.bisect_right(points, t) - 1
        return self.values[i] + self.slope_after(i) * (t - points[i])

    def _left_inverse(self, level: float) -> float:
        # smallest t with g(t) = level, level >= minimum
        points = self.breakpoints
        n = self.n
        if level >= self.values[0]:
            return points[0] - (level - self.values[0]) / n
        lo = self.median_interval[0]
        i = bisect.bisect_left(points, lo)
        # walk left while the value at the previous breakpoint is still below level
        while i > 0 and self.values[i - 1] <= level:
            i -= 1
        # g decreases on [points[i - 1], points[i]] with slope slope_after(i - 1) < 0
        slope = self.slope_after(i - 1)
        return points[i] + (level - self.values[i]) / slope

    def _right_inverse(self, level: float) -> float:
        # largest t with g(t) = level, level >= minimum
        points = self.breakpoints
        n = self.n
        if level >= self.values[-1]:
            return points[-1] + (level - self.values[-1]) / n
        hi = self.median_interval[1]
        i = bisect.bisect_right(points, hi) - 1
        while i < n - 1 and self.values[i + 1] <= level:
            i += 1
        slope = self.slope_after(i)
        return points[i] + (level - self.values[i]) / slope

    def sublevel_interval(self, level: float) -> tuple[float, float] | None:
        """See [`sublevel_interval`][taxicurve.polygonize.profile.sublevel_interval]."""
        return sublevel_interval(self, level)

def abs_sum_profile(coords: list[float]) -> PiecewiseLinearConvex:
    """
        Builds the exact profile `g(t) = sum_i |t - c_i|` of a list of coordinates.

        Parameters:
            coords: list of finite values, at least one.

        Returns:
            the profile with breakpoints at the sorted coordinates.

        Raises:
            EmptyProfileError: if `coords` is empty or contains non-finite values.
    """
    if len(coords) == 0:
        logger.error("empty coordinate list")
        raise EmptyProfileError("a profile requires at least one coordinate")
    if not all(math.isfinite(c) for c in coords):
        logger.error(f"non-finite coordinates: {coords}")
        raise EmptyProfileError(f"non-finite coordinates: {coords}")

    points = tuple(sorted(float(c) for c in coords))
    values = tuple(math.fsum(abs(t - c) for c in points) for t in points)
    return PiecewiseLinearConvex(points, values)

def sublevel_interval(h: PiecewiseLinearConvex, level: float) -> tuple[float, float] | None:
    """
        Solves `{t : h(t) <= level}`.

        Endpoints are found exactly on the linear pieces of `h`.

        Parameters:
            h: convex profile.
            level: value of the level set.

        Returns:
            the closed interval `(lo, hi)`, or `None` when `level < min h`.
    """
    minimum = h.minimum
    if level < minimum:
        return None
    if level == minimum:
        return h.median_interval
    return (h._left_inverse(level), h._right_inverse(level))
