import logging
from fractions import Fraction

import pytest
import numpy as np

from taxicurve.core.metric import Point, EUCLIDEAN
from taxicurve.core.exceptions import InvalidArgumentError
from taxicurve.polygonize.polygon import DegenerateKind
from taxicurve.polygonize.exceptions import EmptyRegionError
from taxicurve.measures.paper import CANONICAL_TRIFOCAL_FOCI, trifocal_measures_paper
from taxicurve.measures.oracle import (
    ReconcileFamily,
    fermat_point_taxicab,
    measures_oracle,
    monte_carlo_area,
    reconcile
)

ORIGIN = Point(0.0, 0.0)
TRIFOCAL = list(CANONICAL_TRIFOCAL_FOCI)

# measures_oracle
@pytest.mark.parametrize(
    "S, area, perimeter",
    [
        (2.5, 1 / 6, 8 / 3),
        (3.0, 2 / 3, 16 / 3),
        (4.0, 20 / 9, 8.0)
    ]
)
def test_measures_oracle_trifocal(S: float, area: float, perimeter: float) -> None:
    """Test the oracle measures of the canonical trifocal ellipse."""

    measure = measures_oracle(TRIFOCAL, S)
    assert measure.area == pytest.approx(area, abs = 1e-12)
    assert measure.perimeter == pytest.approx(perimeter, abs = 1e-12)
    return

def test_measures_oracle_minimizing_set() -> None:
    """Test that `S = S0` measures the rectangle of minimizers."""

    measure = measures_oracle([ORIGIN, Point(2.0, 1.0)], 3.0)
    assert measure.area == 2.0
    assert measure.perimeter == 6.0

    point = measures_oracle(TRIFOCAL, 2.0)
    assert point.area == 0.0
    assert point.perimeter == 0.0
    return

def test_measures_oracle_empty(caplog: pytest.LogCaptureFixture) -> None:
    """Test that an empty region raises an error."""

    with caplog.at_level(logging.ERROR):
        with pytest.raises(EmptyRegionError):
            measures_oracle(TRIFOCAL, 1.5)

    assert "empty region" in caplog.text
    return

def test_measures_oracle_perimeter_concordance() -> None:
    """Test that the printed trifocal perimeter agrees with the oracle over both branches."""

    for S in (2.1, 2.5, 3.0, 3.5, 4.0, 5.0):
        paper = trifocal_measures_paper(S)
        oracle = measures_oracle(TRIFOCAL, S)
        assert float(paper.perimeter) == pytest.approx(oracle.perimeter, abs = 1e-9)

    return

# monte_carlo_area
def test_monte_carlo_area_trifocal() -> None:
    """Test that the sampled area confirms the oracle area within 1%."""

    for S in (2.5, 3.0, 4.0):
        oracle = measures_oracle(TRIFOCAL, S)
        assert monte_carlo_area(TRIFOCAL, S, seed = 1) == pytest.approx(oracle.area, rel = 1e-2)

    return

def test_monte_carlo_area_euclidean() -> None:
    """Test the sampled area of the Euclidean trifocal ellipse."""

    assert monte_carlo_area(TRIFOCAL, 3.0, metric = EUCLIDEAN) == pytest.approx(1.7758, rel = 2e-2)
    return

def test_monte_carlo_area_seed() -> None:
    """Test that equal seeds give equal estimates."""

    first = monte_carlo_area(TRIFOCAL, 3.0, samples = 10_000, seed = 42)
    second = monte_carlo_area(TRIFOCAL, 3.0, samples = 10_000, seed = 42)
    assert first == second
    return

def test_monte_carlo_area_invalid() -> None:
    """Test the validation of the number of samples and the empty region."""

    with pytest.raises(InvalidArgumentError):
        monte_carlo_area(TRIFOCAL, 3.0, samples = 0)

    with pytest.raises(EmptyRegionError):
        monte_carlo_area(TRIFOCAL, 1.0, samples = 10)

    return

# fermat_point_taxicab
def test_fermat_point_examples() -> None:
    """Test the minimizing sets of odd and even focus counts."""

    result = fermat_point_taxicab(TRIFOCAL)
    assert result.minimizing_set.kind == DegenerateKind.POINT
    assert result.minimizing_set.corner_lo == ORIGIN
    assert result.S0 == 2.0

    rectangle = fermat_point_taxicab([ORIGIN, Point(2.0, 1.0)])
    assert rectangle.minimizing_set.kind == DegenerateKind.RECTANGLE
    assert rectangle.minimizing_set.corner_hi == Point(2.0, 1.0)
    assert rectangle.S0 == 3.0

    segment = fermat_point_taxicab([ORIGIN, Point(0.0, 2.0)])
    assert segment.minimizing_set.kind == DegenerateKind.SEGMENT
    assert segment.S0 == 2.0

    square = fermat_point_taxicab([ORIGIN, Point(2.0, 0.0), Point(0.0, 2.0), Point(2.0, 2.0)])
    assert square.minimizing_set.area == 4.0
    assert square.S0 == 8.0
    return

def test_fermat_point_minimality() -> None:
    """Test on random foci that no sampled point beats `S0`."""

    rng = np.random.default_rng(8)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        foci = np.round(rng.uniform(-5, 5, (n, 2)), 1)
        result = fermat_point_taxicab([Point(float(x), float(y)) for x, y in foci])

        samples = rng.uniform(-6, 6, (500, 2))
        sums = np.abs(samples[:, None, :] - foci[None, :, :]).sum(axis = (1, 2))
        assert sums.min() >= result.S0 - 1e-9

    return

# reconcile
def test_reconcile_circle() -> None:
    """Test that the printed circle area is twice the oracle area."""

    report = reconcile("circle", r = 1)
    assert report.family == ReconcileFamily.CIRCLE
    assert report.oracle.area == 2.0
    assert report.area_abs_diff == 2.0
    assert not report.area_agrees
    assert report.perimeter_agrees
    assert not report.agrees
    assert report.bbox_area_gap is None
    return

@pytest.mark.parametrize(
    "F2, gamma",
    [
        (Point(2.0, 0.0), -4.0),
        (Point(2.0, 1.0), -5.0)
    ]
)
def test_reconcile_ellipse_bbox_gap(F2: Point, gamma: float) -> None:
    """Test that hexagon and octagon areas differ from the oracle by the bounding box gap."""

    report = reconcile(ReconcileFamily.ELLIPSE, F1 = ORIGIN, F2 = F2, gamma = gamma)
    assert report.perimeter_agrees
    assert not report.area_agrees
    assert report.bbox_area_gap == 2.0
    assert report.area_abs_diff == pytest.approx(report.bbox_area_gap)
    return

def test_reconcile_ellipse_rectangle() -> None:
    """Test that the degenerate rectangle agrees on both measures."""

    report = reconcile("ellipse", F1 = ORIGIN, F2 = Point(2.0, 1.0), gamma = -3.0)
    assert report.agrees
    assert report.bbox_area_gap is None
    return

def test_reconcile_ellipse_random_perimeters() -> None:
    """Test on random hexagons and octagons that the printed perimeter agrees with the oracle."""

    rng = np.random.default_rng(13)
    for i in range(200):
        x1, y1, x2, y2 = (float(v) for v in rng.uniform(-10, 10, 4))
        if i % 2 == 0:
            y2 = y1
        F1, F2 = Point(x1, y1), Point(x2, y2)
        alpha = float(rng.uniform(0.1, 5))
        gamma = -(abs(x1 - x2) + abs(y1 - y2) + 2 * alpha)

        report = reconcile("ellipse", F1 = F1, F2 = F2, gamma = gamma)
        assert report.perimeter_agrees
        assert report.bbox_area_gap == pytest.approx(2 * alpha ** 2)

    return

def test_reconcile_trifocal(caplog: pytest.LogCaptureFixture) -> None:
    """Test that the trifocal areas disagree while the perimeters agree."""

    with caplog.at_level(logging.INFO):
        report = reconcile("trifocal", S = Fraction(5, 2))

    assert report.paper.area == Fraction(1, 3)
    assert report.oracle.area == pytest.approx(1 / 6)
    assert not report.area_agrees
    assert report.perimeter_agrees
    assert "area disagreement" in caplog.text
    return

def test_reconcile_invalid() -> None:
    """Test that unknown families and missing parameters are rejected."""

    with pytest.raises(InvalidArgumentError):
        reconcile("hyperbola", S = 3.0)

    with pytest.raises(InvalidArgumentError):
        reconcile("circle")

    with pytest.raises(InvalidArgumentError):
        reconcile("ellipse", F1 = ORIGIN, gamma = -3.0)

    return
