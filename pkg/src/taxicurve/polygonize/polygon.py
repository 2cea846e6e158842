import math
import logging
from enum import Enum
from dataclasses import dataclass

from ..core.exceptions import InvalidArgumentError
from ..core.metric import Point, Metric, TAXICAB, minkowski_distance
from ..core.schema import DEFAULT_TOLERANCES
from .profile import PiecewiseLinearConvex, abs_sum_profile, sublevel_interval
from .exceptions import PolygonError

# set logging
logger = logging.getLogger(__name__)

@dataclass(frozen = True)
class Polygon:
    """
        Class representing an ordered chain of vertices; when `closed` is
        `True` the last vertex is joined back to the first one.

        Polygons built by [`sum_ellipse_polygon`][taxicurve.polygonize.polygon.sum_ellipse_polygon]
        are convex, counterclockwise and free of duplicate or collinear vertices.
        The contour tracer uses the same class for its open or closed chains.
    """

    vertices: tuple[Point, ...]
    """Vertices of the chain."""

    closed: bool = True
    """Flag to indicate if the chain is closed."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        """Returns the list of edges, closing edge included when the chain is closed."""
        pairs = list(zip(self.vertices, self.vertices[1:]))
        if self.closed and len(self.vertices) > 2:
            pairs.append((self.vertices[-1], self.vertices[0]))
        return pairs

    def bbox(self) -> tuple[float, float, float, float]:
        """Returns `(x_min, y_min, x_max, y_max)`."""
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def signed_area(self) -> float:
        """Shoelace sum; positive for counterclockwise chains."""
        terms = (a.x * b.y - b.x * a.y for a, b in self.edges())
        return math.fsum(terms) / 2

    def is_convex(self) -> bool:
        """Checks that the cross products of consecutive edges share the same sign."""
        n = len(self.vertices)
        if n < 3:
            return False
        signs = set()
        for i in range(n):
            a, b, c = self.vertices[i - 2], self.vertices[i - 1], self.vertices[i]
            cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
            if cross != 0:
                signs.add(cross > 0)
        return len(signs) == 1

class DegenerateKind(str, Enum):
    """
        Kinds of the degenerate level sets of a sum-ellipse.
    """

    EMPTY = "empty"
    POINT = "point"
    SEGMENT = "segment"
    RECTANGLE = "rectangle"

@dataclass(frozen = True)
class DegenerateSet:
    """
        Class representing the level set of a sum-ellipse when it has no
        interior: the empty set (`S < S0`) or the set of minimizers
        (`S = S0`), that is a point, an axis-parallel segment or a rectangle.
    """

    kind: DegenerateKind
    """Kind of set."""

    corner_lo: Point | None = None
    """Lower-left corner; `None` for the empty set."""

    corner_hi: Point | None = None
    """Upper-right corner; `None` for the empty set."""

    @classmethod
    def empty(cls) -> "DegenerateSet":
        return cls(DegenerateKind.EMPTY)

    @classmethod
    def from_box(cls, x_lo: float, x_hi: float, y_lo: float, y_hi: float) -> "DegenerateSet":
        """
            Builds the set `[x_lo, x_hi] x [y_lo, y_hi]` choosing the right kind.
        """
        flat_x = x_hi - x_lo <= DEFAULT_TOLERANCES.dedupe
        flat_y = y_hi - y_lo <= DEFAULT_TOLERANCES.dedupe
        if flat_x and flat_y:
            kind = DegenerateKind.POINT
        elif flat_x or flat_y:
            kind = DegenerateKind.SEGMENT
        else:
            kind = DegenerateKind.RECTANGLE
        return cls(kind, Point(x_lo, y_lo), Point(x_hi, y_hi))

    @property
    def width(self) -> float:
        if self.corner_lo is None or self.corner_hi is None:
            return 0.0
        return self.corner_hi.x - self.corner_lo.x

    @property
    def height(self) -> float:
        if self.corner_lo is None or self.corner_hi is None:
            return 0.0
        return self.corner_hi.y - self.corner_lo.y

    @property
    def area(self) -> float:
        """Area of the rectangle `|dx| * |dy|`."""
        return self.width * self.height

    @property
    def taxicab_perimeter(self) -> float:
        """Perimeter of the rectangle `2 (|dx| + |dy|)`."""
        return 2 * (self.width + self.height)

    def points(self) -> list[Point]:
        """Returns the distinct corners of the set."""
        if self.corner_lo is None or self.corner_hi is None:
            return []
        lo, hi = self.corner_lo, self.corner_hi
        match self.kind:
            case DegenerateKind.POINT:
                return [lo]
            case DegenerateKind.SEGMENT:
                return [lo, hi]
            case _:
                return [lo, Point(hi.x, lo.y), hi, Point(lo.x, hi.y)]

def shoelace_area(poly: Polygon) -> float:
    """
        Area of a simple closed polygon with the surveyor's formula.

        Parameters:
            poly: closed polygon with at least three vertices.

        Returns:
            nonnegative area, independent of the orientation.

        Raises:
            PolygonError: if the polygon is open or has less than three vertices.
    """
    if not poly.closed or len(poly) < 3:
        logger.error(f"shoelace requires a closed polygon, got closed = {poly.closed}, vertices = {len(poly)}")
        raise PolygonError("shoelace area requires a closed polygon with at least 3 vertices")
    return abs(poly.signed_area())

def polygon_perimeter(poly: Polygon, metric: Metric = TAXICAB) -> float:
    """
        Sum of the edge lengths measured with `metric`; the closing edge is
        included for closed polygons.

        Raises:
            PolygonError: if the polygon has less than two vertices.
    """
    if len(poly) < 2:
        logger.error(f"perimeter requires at least 2 vertices, got {len(poly)}")
        raise PolygonError("perimeter requires at least 2 vertices")
    return math.fsum(minkowski_distance(a, b, metric) for a, b in poly.edges())

def dedupe_vertices(points: list[Point], tol: float, closed: bool = True) -> list[Point]:
    """Drops consecutive vertices closer than `tol`; the wrap-around pair is checked for closed chains."""
    result: list[Point] = []
    for p in points:
        if result and abs(p.x - result[-1].x) <= tol and abs(p.y - result[-1].y) <= tol:
            continue
        result.append(p)
    while closed and len(result) > 1 and abs(result[0].x - result[-1].x) <= tol and abs(result[0].y - result[-1].y) <= tol:
        result.pop()
    return result

def _drop_collinear(points: list[Point]) -> list[Point]:
    result = list(points)
    changed = True
    while changed and len(result) > 3:
        changed = False
        for i in range(len(result)):
            a, b, c = result[i - 1], result[i], result[(i + 1) % len(result)]
            ux, uy = b.x - a.x, b.y - a.y
            vx, vy = c.x - b.x, c.y - b.y
            cross = ux * vy - uy * vx
            if abs(cross) <= 1e-10 * math.hypot(ux, uy) * math.hypot(vx, vy):
                del result[i]
                changed = True
                break
    return result

def _kink_abscissas(g: PiecewiseLinearConvex, h: PiecewiseLinearConvex, S: float, x_lo: float, x_hi: float) -> list[float]:
    # breakpoints of g and abscissas where S - g(x) crosses a breakpoint value of h
    candidates = {x_lo, x_hi}
    candidates.update(p for p in g.breakpoints if x_lo < p < x_hi)
    for value in set(h.values):
        interval = sublevel_interval(g, S - value)
        if interval is None:
            continue
        candidates.update(t for t in interval if x_lo <= t <= x_hi)
    return sorted(candidates)

def sum_ellipse_polygon(foci: list[Point], S: float) -> Polygon | DegenerateSet:
    """
        Exact construction of the region `{P : sum_i d1(P, F_i) <= S}`.

        The focal sum is separable, `g(x) + h(y)`, with `g` and `h` the
        profiles of the focus abscissas and ordinates. With `S0 = min g + min h`:

        - `S < S0`: the empty set;
        - `S = S0`: the set of minimizers, product of the two median intervals;
        - `S > S0`: the convex polygon whose vertices lie at the breakpoints of `g`
            and where `S - g(x)` crosses a breakpoint value of `h`. The upper
            chain is listed from right to left, then the lower chain from left
            to right, so the polygon is counterclockwise.

        Parameters:
            foci: nonempty list of foci.
            S: focal sum.

        Returns:
            a `Polygon` when `S > S0`, a `DegenerateSet` otherwise.

        Raises:
            InvalidArgumentError: if `S` is not finite.
            EmptyProfileError: if `foci` is empty.
    """
    logger.debug("start")
    if not math.isfinite(S):
        logger.error(f"non-finite focal sum: {S}")
        raise InvalidArgumentError(f"focal sum must be finite, got {S}")

    g = abs_sum_profile([focus.x for focus in foci])
    h = abs_sum_profile([focus.y for focus in foci])
    S0 = g.minimum + h.minimum
    logger.debug(f"S0: {S0}, S: {S}")

    if math.isclose(S, S0, rel_tol = 0.0, abs_tol = DEFAULT_TOLERANCES.classification):
        logger.info("focal sum equals S0, returning the minimizing set")
        return DegenerateSet.from_box(*g.median_interval, *h.median_interval)
    if S < S0:
        logger.info("focal sum below S0, empty region")
        return DegenerateSet.empty()

    x_lo, x_hi = sublevel_interval(g, S - h.minimum) # type: ignore (S > S0)
    abscissas = _kink_abscissas(g, h, S, x_lo, x_hi)
    logger.debug(f"candidate abscissas: {len(abscissas)}")

    def y_slice(x: float) -> tuple[float, float]:
        level = max(S - g(x), h.minimum)
        return sublevel_interval(h, level) # type: ignore (level >= min h)

    upper = [Point(x, y_slice(x)[1]) for x in reversed(abscissas)]
    lower = [Point(x, y_slice(x)[0]) for x in abscissas]

    vertices = _drop_collinear(dedupe_vertices(upper + lower, DEFAULT_TOLERANCES.dedupe))
    logger.info(f"polygon built, vertices: {len(vertices)}")

    logger.debug("end")
    return Polygon(tuple(vertices), closed = True)

def lattice_circle_points(center: Point, r: int) -> list[Point]:
    """
        Discrete taxicab circle: the grid points at taxicab distance exactly
        `r` from an integer `center`, listed counterclockwise from `(x + r, y)`.
        The circle has `4r` points.

        Raises:
            InvalidArgumentError: if `r` is not a positive integer or `center` is not a grid point.
    """
    if not isinstance(r, int) or r <= 0:
        logger.error(f"invalid lattice radius: {r}")
        raise InvalidArgumentError(f"lattice radius must be a positive integer, got {r}")
    if not (float(center.x).is_integer() and float(center.y).is_integer()):
        logger.error(f"center not on the grid: {center}")
        raise InvalidArgumentError(f"lattice circle center must have integer coordinates, got {center}")

    cx, cy = int(center.x), int(center.y)
    points = []
    for k in range(r):
        points.append(Point(cx + r - k, cy + k))
    for k in range(r):
        points.append(Point(cx - k, cy + r - k))
    for k in range(r):
        points.append(Point(cx - r + k, cy - k))
    for k in range(r):
        points.append(Point(cx + k, cy - r + k))
    return points
