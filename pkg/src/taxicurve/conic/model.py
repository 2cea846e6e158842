import math
import logging
from enum import Enum
from typing import TypeVar
from dataclasses import dataclass
from abc import ABCMeta, abstractmethod

import numpy as np

from ..core.metric import Point, Line
from .exceptions import InvalidConicError

# set logging
logger = logging.getLogger(__name__)

# scalar or numpy array of coordinates
TCoord = TypeVar("TCoord", float, np.ndarray)

def _check_gamma(gamma: float) -> None:
    if not math.isfinite(gamma) or gamma > 0:
        logger.error(f"invalid gamma: {gamma}")
        raise InvalidConicError(f"gamma must be a finite real <= 0, got {gamma}")

def _focal_distance(focus: Point, x: TCoord, y: TCoord) -> TCoord:
    return abs(x - focus.x) + abs(y - focus.y)

def _focal_sum(foci: tuple[Point, ...], x: TCoord, y: TCoord) -> TCoord:
    total = 0.0
    for focus in foci:
        total = total + _focal_distance(focus, x, y)
    return total

class ConicFamily(str, Enum):
    """
        Enumeration of the curve families handled by the library.
    """

    CIRCLE = "circle"
    """Taxicab circle `|x - x1| + |y - y1| = r`."""

    ELLIPSE = "ellipse"
    """Two-foci taxicab ellipse `d1(P, F1) + d1(P, F2) + gamma = 0`."""

    HYPERBOLA = "hyperbola"
    """Two-foci taxicab hyperbola `d1(P, F1) - d1(P, F2) -/+ gamma = 0`."""

    PARABOLA = "parabola"
    """Focus-directrix taxicab parabola."""

    SUM_ELLIPSE = "sumellipse"
    """Locus with constant sum of taxicab distances from `n` foci."""

class BranchSign(int, Enum):
    """
        Choice of the `±` sign of the general conic equation. The equation
        carries `∓ alpha * gamma`, so `PLUS` yields `- alpha * gamma` and
        `MINUS` yields `+ alpha * gamma`.
    """

    PLUS = 1
    MINUS = -1

class ConicSpec(metaclass = ABCMeta):
    """
        Base class of the curve families. Each family exposes the residual of
        its defining equation; the curve is the zero set of the residual.
    """

    family: ConicFamily

    @abstractmethod
    def residual_xy(self, x: TCoord, y: TCoord) -> TCoord:
        """
            Residual of the defining equation at `(x, y)`; `x` and `y` may be
            floats or `numpy` arrays of the same shape.
        """
        ...

    @abstractmethod
    def anchor_points(self) -> list[Point]:
        """Foci (or center) of the curve, used for rendering markers and default boxes."""
        ...

    @property
    def is_separable(self) -> bool:
        """`True` when the enclosed region is `{g(x) + h(y) <= S}`, so it can be built exactly."""
        return False

@dataclass(frozen = True)
class Circle(ConicSpec):
    """Taxicab circle with `center` and radius `r > 0`."""

    center: Point
    r: float

    family = ConicFamily.CIRCLE

    def __post_init__(self) -> None:
        if not math.isfinite(self.r) or self.r <= 0:
            logger.error(f"invalid radius: {self.r}")
            raise InvalidConicError(f"radius must be a finite real > 0, got {self.r}")

    def residual_xy(self, x: TCoord, y: TCoord) -> TCoord:
        return _focal_sum((self.center,), x, y) - self.r

    def anchor_points(self) -> list[Point]:
        return [self.center]

    @property
    def is_separable(self) -> bool:
        return True

@dataclass(frozen = True)
class TwoFociEllipse(ConicSpec):
    """Taxicab ellipse with foci `F1`, `F2` and constant `gamma <= 0` (the focal sum is `-gamma`)."""

    F1: Point
    F2: Point
    gamma: float

    family = ConicFamily.ELLIPSE

    def __post_init__(self) -> None:
        _check_gamma(self.gamma)

    def residual_xy(self, x: TCoord, y: TCoord) -> TCoord:
        return _focal_sum((self.F1, self.F2), x, y) + self.gamma

    def anchor_points(self) -> list[Point]:
        return [self.F1, self.F2]

    @property
    def is_separable(self) -> bool:
        return True

@dataclass(frozen = True)
class TwoFociHyperbola(ConicSpec):
    """
        Taxicab hyperbola with foci `F1`, `F2` and constant `gamma <= 0`.

        The two signs of the defining equation are folded into the single
        residual `|d1(P, F1) - d1(P, F2)| + gamma`, whose zero set is the
        whole two-branch locus.
    """

    F1: Point
    F2: Point
    gamma: float

    family = ConicFamily.HYPERBOLA

    def __post_init__(self) -> None:
        _check_gamma(self.gamma)

    def residual_xy(self, x: TCoord, y: TCoord) -> TCoord:
        return abs(_focal_distance(self.F1, x, y) - _focal_distance(self.F2, x, y)) + self.gamma

    def anchor_points(self) -> list[Point]:
        return [self.F1, self.F2]

@dataclass(frozen = True)
class Parabola(ConicSpec):
    """Taxicab parabola with focus `F1`, `directrix` and eccentricity `e > 0`."""

    F1: Point
    directrix: Line
    e: float

    family = ConicFamily.PARABOLA

    def __post_init__(self) -> None:
        if not math.isfinite(self.e) or self.e <= 0:
            logger.error(f"invalid eccentricity: {self.e}")
            raise InvalidConicError(f"eccentricity must be a finite real > 0, got {self.e}")

    def residual_xy(self, x: TCoord, y: TCoord) -> TCoord:
        line = self.directrix
        return _focal_distance(self.F1, x, y) - self.e * abs(line.a * x + line.b * y + line.c) / line.norm_taxicab

    def anchor_points(self) -> list[Point]:
        return [self.F1]

@dataclass(frozen = True)
class SumEllipse(ConicSpec):
    """
        Locus of the points whose sum of taxicab distances from `foci` is `S`.

        With three foci it is the trifocal ellipse; one focus gives the circle
        of radius `S` and two foci the ellipse with `gamma = -S`.
    """

    foci: tuple[Point, ...]
    S: float

    family = ConicFamily.SUM_ELLIPSE

    def __post_init__(self) -> None:
        # accept lists, keep the dataclass hashable
        object.__setattr__(self, "foci", tuple(self.foci))
        if len(self.foci) == 0:
            logger.error("empty focus list")
            raise InvalidConicError("a sum-ellipse requires at least one focus")
        if not math.isfinite(self.S):
            logger.error(f"invalid focal sum: {self.S}")
            raise InvalidConicError(f"focal sum must be finite, got {self.S}")

    def residual_xy(self, x: TCoord, y: TCoord) -> TCoord:
        return _focal_sum(self.foci, x, y) - self.S

    def anchor_points(self) -> list[Point]:
        return list(self.foci)

    @property
    def is_separable(self) -> bool:
        return True

def separable_foci(spec: ConicSpec) -> tuple[list[Point], float]:
    """
        Returns the foci and the focal sum of a separable curve, i.e. the
        parameters of the equivalent `SumEllipse`.

        Raises:
            InvalidConicError: if the curve is not separable.
    """
    match spec:
        case Circle():
            return [spec.center], spec.r
        case TwoFociEllipse():
            return [spec.F1, spec.F2], -spec.gamma
        case SumEllipse():
            return list(spec.foci), spec.S
        case _:
            logger.error(f"{spec.family.value} is not separable")
            raise InvalidConicError(f"{spec.family.value} is not a separable curve")

@dataclass(frozen = True)
class GeneralConicSpec:
    """
        Class representing the general taxicab conic

        `|x - x1| + |y - y1| + alpha (|x - x2| + |y - y2|) + beta |ax + by + c| ∓ alpha gamma = 0`

        where `alpha` is `alpha_selector` and `beta = e (alpha^2 - 1) / max(|a|, |b|)`
        is derived from the directrix and the eccentricity.

        With `alpha = 1` the equation describes an ellipse, with `alpha = -1`
        a hyperbola and with `alpha = 0` a parabola.
    """

    F1: Point
    """First focus."""

    alpha_selector: int
    """Selector `alpha` in `{-1, 0, 1}`."""

    F2: Point | None = None
    """Second focus, required when `alpha != 0`."""

    directrix: Line | None = None
    """Directrix, required when `alpha = 0`."""

    e: float = 1.0
    """Eccentricity, `e > 0`."""

    gamma: float = 0.0
    """Constant `gamma <= 0`."""

    def __post_init__(self) -> None:
        if self.alpha_selector not in (-1, 0, 1):
            logger.error(f"invalid alpha selector: {self.alpha_selector}")
            raise InvalidConicError(f"alpha must be one of -1, 0, 1, got {self.alpha_selector}")
        if self.alpha_selector != 0 and self.F2 is None:
            logger.error("second focus missing")
            raise InvalidConicError("alpha != 0 requires the second focus F2")
        if self.alpha_selector == 0 and self.directrix is None:
            logger.error("directrix missing")
            raise InvalidConicError("alpha = 0 requires the directrix")
        if not math.isfinite(self.e) or self.e <= 0:
            logger.error(f"invalid eccentricity: {self.e}")
            raise InvalidConicError(f"eccentricity must be a finite real > 0, got {self.e}")
        _check_gamma(self.gamma)

    @property
    def beta(self) -> float:
        """Coefficient of the directrix term; zero when no directrix is given."""
        if self.directrix is None:
            return 0.0
        return self.e * (self.alpha_selector ** 2 - 1) / self.directrix.norm_taxicab

def general_conic_residual(spec: GeneralConicSpec, P: Point, sign: BranchSign = BranchSign.MINUS) -> float:
    """
        Evaluates the left-hand side of the general taxicab conic equation at `P`.

        Parameters:
            spec: general conic.
            P: point of evaluation.
            sign: choice of the `±` sign; the constant term is `-sign * alpha * gamma`.
                By default `MINUS`, which gives the ellipse `d1 + d2 + gamma` for `alpha = 1`.

        Returns:
            value of the left-hand side, zero on the curve.
    """
    alpha = spec.alpha_selector
    value = _focal_distance(spec.F1, P.x, P.y)
    if spec.F2 is not None:
        value = value + alpha * _focal_distance(spec.F2, P.x, P.y)
    if spec.directrix is not None:
        value = value + spec.beta * abs(spec.directrix.evaluate(P))
    return value - int(sign) * alpha * spec.gamma

def conic_from_general(spec: GeneralConicSpec) -> ConicSpec:
    """
        Maps the general form to the matching family:
        `alpha = 1` to `TwoFociEllipse`, `alpha = -1` to `TwoFociHyperbola`,
        `alpha = 0` to `Parabola`.
    """
    match spec.alpha_selector:
        case 1:
            return TwoFociEllipse(spec.F1, spec.F2, spec.gamma) # type: ignore (F2 checked on init)
        case -1:
            return TwoFociHyperbola(spec.F1, spec.F2, spec.gamma) # type: ignore (F2 checked on init)
        case _:
            return Parabola(spec.F1, spec.directrix, spec.e) # type: ignore (directrix checked on init)

def residual(spec: ConicSpec, P: Point) -> float:
    """
        Residual of the defining equation of `spec` at `P`.

        The residual is zero exactly on the curve; for `Circle`, `TwoFociEllipse`
        and `SumEllipse` it is negative strictly inside the enclosed region and
        positive outside.
    """
    return float(spec.residual_xy(P.x, P.y))

def residual_grid(spec: ConicSpec, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """
        Vectorized residual over the mesh generated by `xs` and `ys`.

        Parameters:
            spec: curve.
            xs: abscissas, shape `(nx,)`.
            ys: ordinates, shape `(ny,)`.

        Returns:
            array of shape `(ny, nx)` where the entry `[j, i]` is the residual at `(xs[i], ys[j])`.
    """
    X, Y = np.meshgrid(np.asarray(xs, dtype = float), np.asarray(ys, dtype = float))
    return np.asarray(spec.residual_xy(X, Y), dtype = float)
