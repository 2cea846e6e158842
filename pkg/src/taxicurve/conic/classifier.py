import math
import logging
import warnings
from enum import Enum
from dataclasses import dataclass

from ..core.metric import Point, Line, taxicab_distance
from ..core.schema import DEFAULT_TOLERANCES
from ..core.warnings import ExtrapolatedClassWarning
from ..polygonize.profile import abs_sum_profile
from .model import ConicSpec, Circle, TwoFociEllipse, TwoFociHyperbola, Parabola, SumEllipse, _check_gamma
from .exceptions import InvalidConicError

# set logging
logger = logging.getLogger(__name__)

class EllipseVariant(str, Enum):
    """
        Shapes of the two-foci taxicab ellipse.
    """

    HEXAGON = "hexagon"
    """`-gamma > delta` with foci on a horizontal or vertical line."""

    OCTAGON = "octagon"
    """`-gamma > delta` with foci in general position."""

    DEGENERATE_RECTANGLE = "degenerate_rectangle"
    """`-gamma = delta`: the rectangular region with diagonal `F1F2`."""

    EMPTY = "empty"
    """`-gamma < delta`: no point has a focal sum below `delta` (extrapolated)."""

class HyperbolaVariant(str, Enum):
    """
        Shapes of the two-foci taxicab hyperbola.
    """

    REGIONS_WITH_TAILS = "regions_with_tails"
    """`-gamma = |eta|`: two planar regions, each with a tail."""

    PARALLEL_LINES = "parallel_lines"
    """`-gamma < delta` and `-gamma < |eta|`: a pair of parallel degenerate lines."""

    TRUE_HYPERBOLA = "true_hyperbola"
    """`|eta| < -gamma < delta`."""

    DEGENERATE = "degenerate"
    """`-gamma >= delta` (extrapolated)."""

class ParabolaVariant(str, Enum):
    """
        Shapes of the taxicab parabola, driven by `e` and `rho = |-a/b|`.
    """

    P1 = "p1"
    """`1 < e < rho`: two branches."""

    P2 = "p2"
    """`1 < e = rho`: two branches."""

    P3 = "p3"
    """`1 < rho < e`: two branches."""

    P4 = "p4"
    """`0 < e < 1`: quadrilateral with a vertical and a horizontal diagonal."""

    P5 = "p5"
    """`e = 1`, `rho != 1`: two segments and two axis-parallel rays."""

    P6 = "p6"
    """`e = 1`, `rho = 1`: one segment, a vertical and a horizontal ray."""

    UNCLASSIFIED = "unclassified"
    """Parameters not covered by the regimes above, e.g. `e > 1` and `rho <= 1` (extrapolated)."""

class SumEllipseVariant(str, Enum):
    """
        Shapes of the sum-ellipse with respect to the minimal focal sum `S0`.
    """

    CLOSED_POLYGON = "closed_polygon"
    """`S > S0`: convex polygon."""

    FERMAT_SET = "fermat_set"
    """`S = S0`: the set of the minimizers (point, segment or rectangle)."""

    EMPTY = "empty"
    """`S < S0`."""

_EXTRAPOLATED = {
    EllipseVariant.EMPTY,
    HyperbolaVariant.DEGENERATE,
    ParabolaVariant.UNCLASSIFIED,
    SumEllipseVariant.EMPTY
}

@dataclass(frozen = True)
class EllipseClass:
    """Classification of a two-foci ellipse."""

    variant: EllipseVariant
    delta: float
    """Taxicab distance between the foci."""

    @property
    def extrapolated(self) -> bool:
        return self.variant in _EXTRAPOLATED

@dataclass(frozen = True)
class HyperbolaClass:
    """Classification of a two-foci hyperbola."""

    variant: HyperbolaVariant
    eta: float
    """Value `x1 - x2 - y1 + y2`."""
    delta: float
    """Taxicab distance between the foci."""

    @property
    def extrapolated(self) -> bool:
        return self.variant in _EXTRAPOLATED

@dataclass(frozen = True)
class ParabolaClass:
    """Classification of a parabola."""

    variant: ParabolaVariant
    rho: float
    """Value `|-a/b|` of the directrix, `math.inf` for vertical directrices."""

    @property
    def extrapolated(self) -> bool:
        return self.variant in _EXTRAPOLATED

@dataclass(frozen = True)
class SumEllipseClass:
    """Classification of a sum-ellipse (circles included)."""

    variant: SumEllipseVariant
    S0: float
    """Minimal focal sum."""

    @property
    def extrapolated(self) -> bool:
        return self.variant in _EXTRAPOLATED

Classification = EllipseClass | HyperbolaClass | ParabolaClass | SumEllipseClass

def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol = 0.0, abs_tol = DEFAULT_TOLERANCES.classification)

def _warn_extrapolated(label: str) -> None:
    logger.warning(f"extrapolated class: {label}")
    warnings.warn(f"class '{label}' is not one of the printed regimes", ExtrapolatedClassWarning)

def classify_ellipse(F1: Point, F2: Point, gamma: float) -> EllipseClass:
    """
        Classifies the taxicab ellipse `d1(P, F1) + d1(P, F2) + gamma = 0`.

        With `delta = d1(F1, F2)`:

        - `HEXAGON` if `-gamma > delta` and the foci share `x` or `y`;
        - `OCTAGON` if `-gamma > delta` and the foci share neither coordinate;
        - `DEGENERATE_RECTANGLE` if `-gamma = delta`;
        - `EMPTY` if `-gamma < delta`.

        Coincident foci fall into `HEXAGON` even if the curve is a circle.

        Parameters:
            F1: first focus.
            F2: second focus.
            gamma: constant, `gamma <= 0`.

        Returns:
            the classification and `delta`.

        Raises:
            InvalidConicError: if `gamma > 0` or is not finite.
    """
    logger.debug("start")
    _check_gamma(gamma)

    delta = taxicab_distance(F1, F2)
    level = -gamma
    logger.debug(f"delta: {delta}, -gamma: {level}")

    if _close(level, delta):
        variant = EllipseVariant.DEGENERATE_RECTANGLE
    elif level < delta:
        variant = EllipseVariant.EMPTY
    elif F1.x == F2.x or F1.y == F2.y:
        variant = EllipseVariant.HEXAGON
    else:
        variant = EllipseVariant.OCTAGON

    result = EllipseClass(variant, delta)
    if result.extrapolated:
        _warn_extrapolated(variant.value)
    logger.info(f"ellipse class: {variant.value}")

    logger.debug("end")
    return result

def classify_hyperbola(F1: Point, F2: Point, gamma: float) -> HyperbolaClass:
    """
        Classifies the taxicab hyperbola `|d1(P, F1) - d1(P, F2)| + gamma = 0`.

        With `eta = x1 - x2 - y1 + y2` and `delta = d1(F1, F2)`:

        - `REGIONS_WITH_TAILS` if `-gamma = |eta|` (checked first, so it also wins when `|eta| = delta`);
        - `DEGENERATE` if `-gamma >= delta`;
        - `PARALLEL_LINES` if `-gamma < |eta|` (and so `-gamma < delta`);
        - `TRUE_HYPERBOLA` if `|eta| < -gamma < delta`.

        Raises:
            InvalidConicError: if `gamma > 0` or is not finite.
    """
    logger.debug("start")
    _check_gamma(gamma)

    delta = taxicab_distance(F1, F2)
    eta = F1.x - F2.x - F1.y + F2.y
    level = -gamma
    logger.debug(f"delta: {delta}, eta: {eta}, -gamma: {level}")

    if _close(level, abs(eta)):
        variant = HyperbolaVariant.REGIONS_WITH_TAILS
    elif level > delta or _close(level, delta):
        variant = HyperbolaVariant.DEGENERATE
    elif level < abs(eta):
        variant = HyperbolaVariant.PARALLEL_LINES
    else:
        variant = HyperbolaVariant.TRUE_HYPERBOLA

    result = HyperbolaClass(variant, eta, delta)
    if result.extrapolated:
        _warn_extrapolated(variant.value)
    logger.info(f"hyperbola class: {variant.value}")

    logger.debug("end")
    return result

def classify_parabola(F: Point, directrix: Line, e: float) -> ParabolaClass:
    """
        Classifies the taxicab parabola with focus `F`, `directrix` and eccentricity `e`.

        With `rho = |-a/b|` (infinite when `b = 0`):

        - `P1` if `1 < e < rho`;
        - `P2` if `1 < e = rho`;
        - `P3` if `1 < rho < e`;
        - `P4` if `0 < e < 1`;
        - `P5` if `e = 1` and `rho != 1`;
        - `P6` if `e = 1` and `rho = 1`;
        - `UNCLASSIFIED` otherwise (`e > 1` and `rho <= 1`).

        Raises:
            InvalidConicError: if `e <= 0`.
    """
    logger.debug("start")
    if not e > 0:
        logger.error(f"invalid eccentricity: {e}")
        raise InvalidConicError(f"eccentricity must be > 0, got {e}")

    rho = directrix.slope_ratio
    logger.debug(f"rho: {rho}, e: {e}")

    e_is_one = _close(e, 1.0)
    rho_is_one = rho != math.inf and _close(rho, 1.0)
    e_is_rho = rho != math.inf and _close(e, rho)

    if e_is_one:
        variant = ParabolaVariant.P6 if rho_is_one else ParabolaVariant.P5
    elif e < 1:
        variant = ParabolaVariant.P4
    elif rho > 1 and not rho_is_one:
        if e_is_rho:
            variant = ParabolaVariant.P2
        elif e < rho:
            variant = ParabolaVariant.P1
        else:
            variant = ParabolaVariant.P3
    else:
        variant = ParabolaVariant.UNCLASSIFIED

    result = ParabolaClass(variant, rho)
    if result.extrapolated:
        _warn_extrapolated(variant.value)
    logger.info(f"parabola class: {variant.value}")

    logger.debug("end")
    return result

def minimal_focal_sum(foci: list[Point]) -> float:
    """
        Returns `S0`, the minimum over the plane of the sum of taxicab
        distances from `foci`.
    """
    g = abs_sum_profile([focus.x for focus in foci])
    h = abs_sum_profile([focus.y for focus in foci])
    return g.minimum + h.minimum

def classify_sum_ellipse(foci: list[Point], S: float) -> SumEllipseClass:
    """
        Compares the focal sum `S` with the minimal sum `S0` of `foci`.
    """
    logger.debug("start")

    S0 = minimal_focal_sum(foci)
    if _close(S, S0):
        variant = SumEllipseVariant.FERMAT_SET
    elif S < S0:
        variant = SumEllipseVariant.EMPTY
    else:
        variant = SumEllipseVariant.CLOSED_POLYGON

    result = SumEllipseClass(variant, S0)
    if result.extrapolated:
        _warn_extrapolated(variant.value)
    logger.info(f"sum-ellipse class: {variant.value} (S0 = {S0})")

    logger.debug("end")
    return result

def classify(spec: ConicSpec) -> Classification:
    """
        Classifies any curve family; circles and sum-ellipses are compared
        with their minimal focal sum.
    """
    match spec:
        case Circle():
            return classify_sum_ellipse([spec.center], spec.r)
        case TwoFociEllipse():
            return classify_ellipse(spec.F1, spec.F2, spec.gamma)
        case TwoFociHyperbola():
            return classify_hyperbola(spec.F1, spec.F2, spec.gamma)
        case Parabola():
            return classify_parabola(spec.F1, spec.directrix, spec.e)
        case SumEllipse():
            return classify_sum_ellipse(list(spec.foci), spec.S)
        case _:
            raise InvalidConicError(f"unknown curve: {spec!r}")
