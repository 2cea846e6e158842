import pytest

from taxicurve.core.metric import Point, Line
from taxicurve.core.exceptions import InvalidArgumentError
from taxicurve.conic.model import Circle, TwoFociHyperbola, Parabola, SumEllipse, residual
from taxicurve.polygonize.polygon import shoelace_area
from taxicurve.polygonize.contour import BoundingBox, contour_sample

ORIGIN = Point(0.0, 0.0)

# BoundingBox
def test_bounding_box() -> None:
    """Test the padding and the validation of a bounding box."""

    bbox = BoundingBox.from_tuple((0.0, 0.0, 2.0, 1.0))
    assert bbox.padded(0.5).as_tuple() == (-1.0, -0.5, 3.0, 1.5)

    with pytest.raises(InvalidArgumentError):
        BoundingBox(0.0, 0.0, 0.0, 1.0)

    return

# contour_sample
def test_contour_circle() -> None:
    """Test that the traced unit circle is one closed loop of points on the curve."""

    spec = Circle(ORIGIN, 1.0)
    chains = contour_sample(spec, (-2.0, -2.0, 2.0, 2.0), 201)

    assert len(chains) == 1
    loop = chains[0]
    assert loop.closed
    assert all(abs(residual(spec, P)) <= 1e-6 for P in loop.vertices)
    assert shoelace_area(loop) == pytest.approx(2.0, rel = 1e-2)
    return

def test_contour_trifocal() -> None:
    """Test the traced trifocal ellipse against its exact area."""

    spec = SumEllipse([Point(-1.0, 0.0), Point(1.0, 0.0), ORIGIN], 4.0)
    chains = contour_sample(spec, BoundingBox(-2.0, -1.0, 2.0, 1.0), 301)

    assert len(chains) == 1
    assert shoelace_area(chains[0]) == pytest.approx(20 / 9, rel = 1e-2)
    return

def test_contour_true_hyperbola() -> None:
    """Test that a true hyperbola is traced as open chains reaching the border of the window."""

    spec = TwoFociHyperbola(ORIGIN, Point(4.0, 2.0), -4.0)
    chains = contour_sample(spec, (-4.0, -4.0, 8.0, 6.0), 121)

    assert len(chains) >= 2
    assert all(not chain.closed for chain in chains)
    assert all(abs(residual(spec, P)) <= 1e-6 for chain in chains for P in chain.vertices)
    return

def test_contour_hyperbola_plateaus() -> None:
    """Test that the regions with tails are traced as a few open chains despite the zero plateaus."""

    spec = TwoFociHyperbola(ORIGIN, Point(4.0, 2.0), -2.0)
    chains = contour_sample(spec, (-2.0, -2.0, 6.0, 4.0), 81)

    assert 2 <= len(chains) <= 4
    assert all(not chain.closed for chain in chains)
    assert all(abs(residual(spec, P)) <= 1e-6 for chain in chains for P in chain.vertices)
    return

def test_contour_parabola() -> None:
    """Test that a parabola with `e < 1` is traced as one closed loop."""

    spec = Parabola(ORIGIN, Line(1.0, 0.0, -2.0), 0.5)
    chains = contour_sample(spec, (-3.0, -2.0, 2.0, 2.0), 101)

    assert len(chains) == 1
    loop = chains[0]
    assert loop.closed
    assert max(abs(residual(spec, P)) for P in loop.vertices) <= 1e-6
    # rhombus with vertices (2/3, 0), (0, 1), (-2, 0), (0, -1)
    assert shoelace_area(loop) == pytest.approx(8 / 3, rel = 1e-2)
    return

def test_contour_outside_window() -> None:
    """Test that a curve not crossing the window yields no chain."""

    assert contour_sample(Circle(ORIGIN, 1.0), (5.0, 5.0, 6.0, 6.0), 20) == []
    return

def test_contour_deterministic() -> None:
    """Test that two runs give the same chains."""

    spec = SumEllipse([Point(-1.0, 0.0), Point(1.0, 0.0), ORIGIN], 3.0)
    bbox = (-1.5, -1.0, 1.5, 1.0)
    assert contour_sample(spec, bbox, 64) == contour_sample(spec, bbox, 64)
    return

def test_contour_invalid_resolution() -> None:
    """Test that a resolution below 2 is rejected."""

    with pytest.raises(InvalidArgumentError):
        contour_sample(Circle(ORIGIN, 1.0), (-2.0, -2.0, 2.0, 2.0), 1)

    return
