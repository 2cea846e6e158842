import math
import logging
from fractions import Fraction

import pytest

from taxicurve.core.metric import Point, TAXICAB, EUCLIDEAN, Metric
from taxicurve.core.exceptions import InvalidArgumentError
from taxicurve.core.warnings import ExtrapolatedClassWarning
from taxicurve.measures.paper import (
    Measure,
    metric_pi,
    circle_measures_paper,
    two_focus_measures_paper,
    trifocal_measures_paper
)
from taxicurve.measures.exceptions import NoMeasureError, DegenerateInputError

ORIGIN = Point(0.0, 0.0)

# Measure
def test_measure_validation() -> None:
    """Test that negative or non-finite measures are rejected."""

    assert Measure(1.0, 2.0).perimeter_metric == TAXICAB

    with pytest.raises(InvalidArgumentError):
        Measure(-1.0, 2.0)

    with pytest.raises(InvalidArgumentError):
        Measure(1.0, math.inf)

    return

# metric_pi
def test_metric_pi() -> None:
    """Test the circle ratio of the taxicab and Euclidean metrics."""

    assert metric_pi(TAXICAB) == 4.0
    assert metric_pi(EUCLIDEAN) == math.pi

    with pytest.raises(InvalidArgumentError):
        metric_pi(Metric.from_order(3))

    return

# circle_measures_paper
def test_circle_measures_paper() -> None:
    """Test the printed circle measures, exact for rational radii."""

    unit = circle_measures_paper(1)
    assert unit.area == 4
    assert unit.perimeter == 8
    assert isinstance(unit.area, Fraction)

    half = circle_measures_paper(Fraction(1, 2))
    assert half.area == Fraction(1)
    assert half.perimeter == Fraction(4)

    assert circle_measures_paper(2.5).area == 25.0
    return

def test_circle_measures_paper_invalid(caplog: pytest.LogCaptureFixture) -> None:
    """Test that nonpositive radii are rejected and logged."""

    with caplog.at_level(logging.ERROR):
        with pytest.raises(InvalidArgumentError):
            circle_measures_paper(0)

    assert "invalid radius" in caplog.text

    with pytest.raises(InvalidArgumentError):
        circle_measures_paper(math.nan)

    return

# two_focus_measures_paper
@pytest.mark.parametrize(
    "F2, gamma, area, perimeter",
    [
        (Point(2.0, 0.0), -4.0, 8.0, 12.0),
        (Point(2.0, 1.0), -5.0, 12.0, 14.0),
        (Point(2.0, 1.0), -3.0, 2.0, 6.0)
    ]
)
def test_two_focus_measures_paper(F2: Point, gamma: float, area: float, perimeter: float) -> None:
    """Test the printed hexagon, octagon and degenerate rectangle measures."""

    measure = two_focus_measures_paper(ORIGIN, F2, gamma)
    assert measure.area == area
    assert measure.perimeter == perimeter
    return

def test_two_focus_measures_paper_exact() -> None:
    """Test the hexagon measures with a rational gamma."""

    measure = two_focus_measures_paper(ORIGIN, Point(2.0, 0.0), Fraction(-9, 2))
    # 2 alpha = 5/2
    assert measure.area == Fraction(45, 4)
    assert measure.perimeter == Fraction(14)
    return

def test_two_focus_measures_paper_empty() -> None:
    """Test that the empty ellipse has no measures."""

    with pytest.warns(ExtrapolatedClassWarning):
        with pytest.raises(NoMeasureError):
            two_focus_measures_paper(ORIGIN, Point(2.0, 1.0), -2.0)

    return

# trifocal_measures_paper
@pytest.mark.parametrize(
    "S, area, perimeter",
    [
        (Fraction(5, 2), Fraction(1, 3), Fraction(8, 3)),
        (3, Fraction(4, 3), Fraction(16, 3)),
        (4, Fraction(28, 9), Fraction(8))
    ]
)
def test_trifocal_measures_paper(S: Fraction, area: Fraction, perimeter: Fraction) -> None:
    """Test the printed trifocal measures with exact arithmetic."""

    measure = trifocal_measures_paper(S)
    assert measure.area == area
    assert measure.perimeter == perimeter
    return

def test_trifocal_measures_paper_continuity() -> None:
    """Test that both branches meet at `S = 3`."""

    below = trifocal_measures_paper(3 - Fraction(1, 10 ** 9))
    at = trifocal_measures_paper(3)

    assert abs(below.area - at.area) < Fraction(1, 10 ** 8)
    assert abs(below.perimeter - at.perimeter) < Fraction(1, 10 ** 8)
    return

def test_trifocal_measures_paper_float() -> None:
    """Test that float inputs give float measures."""

    measure = trifocal_measures_paper(2.5)
    assert isinstance(measure.area, float)
    assert measure.area == pytest.approx(1 / 3)
    return

def test_trifocal_measures_paper_degenerate() -> None:
    """Test that `S <= 2` and non-finite sums are rejected."""

    with pytest.raises(DegenerateInputError):
        trifocal_measures_paper(2)

    with pytest.raises(DegenerateInputError):
        trifocal_measures_paper(1.5)

    with pytest.raises(InvalidArgumentError):
        trifocal_measures_paper(math.inf)

    return
