import logging
from pathlib import Path

from ..core.metric import Point
from ..conic.model import ConicSpec, separable_foci
from ..polygonize.polygon import Polygon, DegenerateSet, DegenerateKind, sum_ellipse_polygon
from ..polygonize.contour import BoundingBox, contour_sample
from .exceptions import OutputWriteError

# set logging
logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION = 200
"""Grid nodes per side used to trace curves without an exact polygon."""

BBOX_PADDING = 0.2
"""Fraction of the width/height added on every side of the default window."""

PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x:.6f} {y:.6f} {width:.6f} {height:.6f}">
<g transform="scale(1,-1)" fill="none" stroke-linejoin="round">
"""

POSTAMBLE = """\
</g>
</svg>
"""

def _coord(p: Point) -> str:
    return f"{p.x:.6f},{p.y:.6f}"

def _path(points: list[Point], closed: bool, stroke_width: float) -> str:
    d = "M " + " L ".join(_coord(p) for p in points)
    if closed:
        d += " Z"
    return f'<path class="curve" d="{d}" stroke="#000000" stroke-width="{stroke_width:.6f}"/>'

def _marker(p: Point, radius: float, kind: str = "focus") -> str:
    return f'<circle class="{kind}" cx="{p.x:.6f}" cy="{p.y:.6f}" r="{radius:.6f}" fill="#d62728"/>'

def curve_chains(spec: ConicSpec, bbox: BoundingBox, resolution: int = DEFAULT_RESOLUTION) -> list[Polygon]:
    """
        Returns the chains drawn for `spec`: the exact polygon (or the
        degenerate set) for circles, ellipses and sum-ellipses, the
        marching squares chains otherwise.
    """
    if not spec.is_separable:
        return contour_sample(spec, bbox, resolution)

    shape = sum_ellipse_polygon(*separable_foci(spec))
    match shape:
        case Polygon():
            return [shape]
        case DegenerateSet(kind = DegenerateKind.EMPTY):
            return []
        case DegenerateSet(kind = DegenerateKind.RECTANGLE):
            return [Polygon(tuple(shape.points()), closed = True)]
        case _:
            return [Polygon(tuple(shape.points()), closed = False)]

def default_bbox(spec: ConicSpec) -> BoundingBox:
    """
        Window of the drawing: the bounding box of the region padded by 20%,
        or the bounding box of the anchor points enlarged by its size when
        the curve is unbounded or empty.
    """
    if spec.is_separable:
        shape = sum_ellipse_polygon(*separable_foci(spec))
        if isinstance(shape, Polygon):
            return BoundingBox(*shape.bbox()).padded(BBOX_PADDING)

    anchors = spec.anchor_points()
    x_min, x_max = min(p.x for p in anchors), max(p.x for p in anchors)
    y_min, y_max = min(p.y for p in anchors), max(p.y for p in anchors)
    margin = max(x_max - x_min, y_max - y_min, 1.0)
    return BoundingBox(x_min - margin, y_min - margin, x_max + margin, y_max + margin)

def render_svg(
    spec: ConicSpec,
    bbox: BoundingBox | tuple[float, float, float, float] | None = None,
    resolution: int = DEFAULT_RESOLUTION,
    out: str | Path | None = None,
    chains: list[Polygon] | None = None
) -> str:
    """
        Draws `spec` as an SVG 1.1 document.

        The curve is emitted as `path` elements, the foci (or the center,
        or the focus of a parabola) as `circle` markers. The `viewBox` is the
        window with the y axis pointing up. The output only depends on the
        inputs, so equal requests give byte-identical documents.

        Parameters:
            spec: curve to draw.
            bbox: drawing window; by default [`default_bbox`][taxicurve.cli.svg.default_bbox].
            resolution: grid nodes per side for traced curves.
            out: optional path of the file to write.
            chains: curve already traced in `bbox`; traced with [`curve_chains`][taxicurve.cli.svg.curve_chains] when omitted.

        Returns:
            the SVG document.

        Raises:
            OutputWriteError: if `out` cannot be written.
    """
    logger.debug("start")
    if bbox is None:
        bbox = default_bbox(spec)
    elif not isinstance(bbox, BoundingBox):
        bbox = BoundingBox.from_tuple(bbox)

    width = bbox.x_max - bbox.x_min
    height = bbox.y_max - bbox.y_min
    stroke_width = max(width, height) / 250

    if chains is None:
        chains = curve_chains(spec, bbox, resolution)
    lines = [PREAMBLE.format(x = bbox.x_min, y = -bbox.y_max, width = width, height = height)]
    for chain in chains:
        if len(chain) >= 2:
            lines.append(_path(list(chain.vertices), chain.closed, stroke_width) + "\n")
        elif len(chain) == 1:
            lines.append(_marker(chain.vertices[0], stroke_width, kind = "curve") + "\n")
    for anchor in spec.anchor_points():
        lines.append(_marker(anchor, 2 * stroke_width) + "\n")
    lines.append(POSTAMBLE)
    document = "".join(lines)
    logger.info(f"svg rendered, chains: {len(chains)}")

    if out is not None:
        try:
            Path(out).write_text(document, encoding = "utf-8")
        except OSError as e:
            logger.error(f"unable to write {out}: {e}")
            raise OutputWriteError(f"unable to write the SVG file '{out}': {e}")

    logger.debug("end")
    return document
