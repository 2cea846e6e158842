import logging
from dataclasses import dataclass

import numpy as np

from ..core.exceptions import InvalidArgumentError
from ..core.metric import Point
from ..core.schema import DEFAULT_TOLERANCES
from ..conic.model import ConicSpec, residual_grid
from .polygon import Polygon, dedupe_vertices

# set logging
logger = logging.getLogger(__name__)

# (orientation, row, column): "h" joins nodes (i, j)-(i + 1, j), "v" joins (i, j)-(i, j + 1)
EdgeKey = tuple[str, int, int]

@dataclass(frozen = True)
class BoundingBox:
    """
        Axis-parallel rectangle `[x_min, x_max] x [y_min, y_max]`.
    """

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self) -> None:
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            logger.error(f"degenerate bounding box: {self}")
            raise InvalidArgumentError(f"bounding box must have positive width and height, got {self}")

    @classmethod
    def from_tuple(cls, values: tuple[float, float, float, float]) -> "BoundingBox":
        return cls(*values)

    def padded(self, fraction: float) -> "BoundingBox":
        """Returns the box enlarged by `fraction` of its width/height on every side."""
        dx = (self.x_max - self.x_min) * fraction
        dy = (self.y_max - self.y_min) * fraction
        return BoundingBox(self.x_min - dx, self.y_min - dy, self.x_max + dx, self.y_max + dy)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x_min, self.y_min, self.x_max, self.y_max)

def _refine_crossing(spec: ConicSpec, inside: Point, outside: Point) -> Point:
    # bisection between a point with residual <= tol and one with residual > tol
    tol = DEFAULT_TOLERANCES.contour
    value = float(spec.residual_xy(inside.x, inside.y))
    if abs(value) <= tol:
        return inside

    lo, hi = inside, outside
    mid = lo
    for _ in range(DEFAULT_TOLERANCES.contour_max_bisections):
        mid = Point((lo.x + hi.x) / 2, (lo.y + hi.y) / 2)
        value = float(spec.residual_xy(mid.x, mid.y))
        if abs(value) <= tol:
            return mid
        if value <= tol:
            lo = mid
        else:
            hi = mid

    logger.warning(f"crossing not refined below tolerance, residual: {value}")
    return mid

def _cell_segments(inside: np.ndarray, spec: ConicSpec, xs: np.ndarray, ys: np.ndarray, j: int, i: int, tol: float) -> list[tuple[EdgeKey, EdgeKey]]:
    # corners counterclockwise from bottom-left, edges e_k join corner k and k + 1
    corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
    edges: list[EdgeKey] = [("h", j, i), ("v", j, i + 1), ("h", j + 1, i), ("v", j, i)]
    status = [bool(inside[cj, ci]) for ci, cj in corners]

    crossed = [k for k in range(4) if status[k] != status[(k + 1) % 4]]
    if len(crossed) == 2:
        return [(edges[crossed[0]], edges[crossed[1]])]
    if len(crossed) == 4:
        # saddle, resolved by the value at the cell center
        center = float(spec.residual_xy((xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2))
        if (center <= tol) == status[0]:
            # corners 0 and 2 connected through the center
            return [(edges[0], edges[1]), (edges[2], edges[3])]
        return [(edges[3], edges[0]), (edges[1], edges[2])]
    return []

def _link_chains(segments: list[tuple[EdgeKey, EdgeKey]]) -> list[tuple[list[EdgeKey], bool]]:
    incident: dict[EdgeKey, list[int]] = {}
    for index, (a, b) in enumerate(segments):
        incident.setdefault(a, []).append(index)
        incident.setdefault(b, []).append(index)

    used = [False] * len(segments)

    def follow(start_index: int, key: EdgeKey) -> list[EdgeKey]:
        path: list[EdgeKey] = []
        current = start_index
        while True:
            next_index = next((k for k in incident[key] if k != current and not used[k]), None)
            if next_index is None:
                return path
            used[next_index] = True
            a, b = segments[next_index]
            key = b if a == key else a
            path.append(key)
            current = next_index

    chains = []
    for index, (a, b) in enumerate(segments):
        if used[index]:
            continue
        used[index] = True
        forward = follow(index, b)
        closed = len(forward) > 0 and forward[-1] == a
        if closed:
            chains.append(([a, b] + forward[:-1], True))
            continue
        backward = follow(index, a)
        chains.append((list(reversed(backward)) + [a, b] + forward, False))
    return chains

def contour_sample(spec: ConicSpec, bbox: BoundingBox | tuple[float, float, float, float], resolution: int) -> list[Polygon]:
    """
        Traces the zero set of the residual of `spec` with marching squares.

        The residual is sampled on a `resolution x resolution` grid of nodes
        spanning `bbox`; a node is inside when its residual is at most the contour
        tolerance, so a region where the residual vanishes is not fragmented by
        rounding. Every edge joining an inside and an outside node is refined by bisection until the residual is below the
        contour tolerance. Cells are processed in row-major order, so the output
        is deterministic.

        Parameters:
            spec: curve to trace.
            bbox: sampling window.
            resolution: number of grid nodes per side, at least 2.

        Returns:
            list of chains; closed loops have `closed = True`. The list is
            empty when the curve does not cross the window.

        Raises:
            InvalidArgumentError: if `resolution < 2` or the box is degenerate.
    """
    logger.debug("start")
    if not isinstance(bbox, BoundingBox):
        bbox = BoundingBox.from_tuple(bbox)
    if resolution < 2:
        logger.error(f"invalid resolution: {resolution}")
        raise InvalidArgumentError(f"resolution must be >= 2, got {resolution}")

    xs = np.linspace(bbox.x_min, bbox.x_max, resolution)
    ys = np.linspace(bbox.y_min, bbox.y_max, resolution)
    # nodes on a zero plateau count as inside, so rounding noise does not split it
    tol = DEFAULT_TOLERANCES.contour
    inside = residual_grid(spec, xs, ys) <= tol

    segments: list[tuple[EdgeKey, EdgeKey]] = []
    for j in range(resolution - 1):
        for i in range(resolution - 1):
            segments.extend(_cell_segments(inside, spec, xs, ys, j, i, tol))
    logger.debug(f"segments: {len(segments)}")

    cache: dict[EdgeKey, Point] = {}

    def crossing(key: EdgeKey) -> Point:
        if key not in cache:
            orientation, j, i = key
            a = (i, j)
            b = (i + 1, j) if orientation == "h" else (i, j + 1)
            if not inside[a[1], a[0]]:
                a, b = b, a
            cache[key] = _refine_crossing(
                spec,
                inside = Point(float(xs[a[0]]), float(ys[a[1]])),
                outside = Point(float(xs[b[0]]), float(ys[b[1]]))
            )
        return cache[key]

    chains = []
    for keys, closed in _link_chains(segments):
        vertices = dedupe_vertices([crossing(key) for key in keys], DEFAULT_TOLERANCES.dedupe, closed = closed)
        chains.append(Polygon(tuple(vertices), closed = closed))
    logger.info(f"contour traced, chains: {len(chains)}")

    logger.debug("end")
    return chains
