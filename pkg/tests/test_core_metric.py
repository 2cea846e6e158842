import math
import logging

import pytest
import numpy as np
from hypothesis import given, strategies as st

import taxicurve as tc
from taxicurve.core.metric import (
    Point,
    Line,
    Metric,
    MetricKind,
    TAXICAB,
    EUCLIDEAN,
    minkowski_distance,
    euclidean_distance,
    point_line_distance_taxicab
)
from taxicurve.core.exceptions import InvalidArgumentError, InvalidLineError

coordinates = st.floats(min_value = -1e3, max_value = 1e3, allow_nan = False, allow_infinity = False)
points = st.builds(Point, coordinates, coordinates)
orders = st.floats(min_value = 1.0, max_value = 20.0, allow_nan = False, allow_infinity = False)

def _random_point(rng: np.random.Generator) -> Point:
    return Point(*rng.uniform(-100, 100, 2))

# Point / Line / Metric
def test_point_non_finite() -> None:
    """Test that a point with non-finite coordinates is rejected."""

    with pytest.raises(InvalidArgumentError):
        Point(math.inf, 0.0)

    with pytest.raises(InvalidArgumentError):
        Point(0.0, math.nan)

    return

def test_line_degenerate(caplog: pytest.LogCaptureFixture) -> None:
    """Test that the line with `a = b = 0` is rejected and the error is logged."""

    with caplog.at_level(logging.ERROR):
        with pytest.raises(InvalidLineError):
            Line(0.0, 0.0, 1.0)

    assert "degenerate line" in caplog.text
    return

def test_line_slope_ratio() -> None:
    """Test the ratio `|-a/b|`, infinite for vertical lines."""

    assert Line(2.0, 1.0, -5.0).slope_ratio == 2.0
    assert Line(1.0, 2.0, -5.0).slope_ratio == 0.5
    assert Line(1.0, 0.0, -2.0).slope_ratio == math.inf
    return

def test_metric_order_validation() -> None:
    """Test that orders below 1 are rejected."""

    with pytest.raises(InvalidArgumentError):
        Metric.from_order(0.5)

    return

def test_metric_from_order() -> None:
    """Test that orders 1 and 2 are normalized to the named metrics."""

    assert Metric.from_order(1) == TAXICAB
    assert Metric.from_order(2) == EUCLIDEAN

    metric = Metric.from_order(3)
    assert metric.kind == MetricKind.MINKOWSKI
    assert metric.k == 3.0
    return

def test_metric_parse() -> None:
    """Test the string representation of the metrics used by the command line."""

    assert Metric.parse("taxicab") == TAXICAB
    assert Metric.parse(" Euclidean ") == EUCLIDEAN
    assert Metric.parse("minkowski:3") == Metric.from_order(3)
    assert Metric.parse("minkowski:1") == TAXICAB
    assert str(Metric.from_order(3)) == "minkowski:3"

    with pytest.raises(InvalidArgumentError):
        Metric.parse("chebyshev")

    with pytest.raises(InvalidArgumentError):
        Metric.parse("minkowski:abc")

    return

# minkowski_distance
def test_minkowski_distance_examples() -> None:
    """Test the distances of the 3-4-5 triangle and of coincident points."""

    A = Point(0.0, 0.0)
    B = Point(3.0, 4.0)
    assert minkowski_distance(A, B, TAXICAB) == 7.0
    assert minkowski_distance(A, B, EUCLIDEAN) == 5.0

    C = Point(1.0, 1.0)
    for k in (1, 1.5, 2, 3, 10):
        assert minkowski_distance(C, C, Metric.from_order(k)) == 0.0

    return

def test_minkowski_distance_default_metric() -> None:
    """Test that the default metric is taxicab."""

    assert minkowski_distance(Point(0.0, 0.0), Point(-2.0, 1.5)) == 3.5
    assert tc.core.taxicab_distance(Point(0.0, 0.0), Point(-2.0, 1.5)) == 3.5
    return

def test_euclidean_distance() -> None:
    """Test the Euclidean shortcut against the order-2 metric."""

    A, B = Point(-1.0, 2.0), Point(2.0, -2.0)
    assert euclidean_distance(A, B) == 5.0
    assert euclidean_distance(A, B) == pytest.approx(minkowski_distance(A, B, EUCLIDEAN))
    return

def test_minkowski_distance_large_order() -> None:
    """Test that large orders do not overflow and approach the maximum norm."""

    d = minkowski_distance(Point(0.0, 0.0), Point(3.0, 4.0), Metric.from_order(200))
    assert math.isfinite(d)
    assert d == pytest.approx(4.0, rel = 1e-2)
    return

@given(points, points, orders)
def test_minkowski_distance_symmetry(A: Point, B: Point, k: float) -> None:
    """Property: the distance is symmetric."""

    metric = Metric.from_order(k)
    assert minkowski_distance(A, B, metric) == minkowski_distance(B, A, metric)

@given(points, points, points, orders)
def test_minkowski_distance_triangle_inequality(A: Point, B: Point, C: Point, k: float) -> None:
    """Property: the triangle inequality holds for every order."""

    metric = Metric.from_order(k)
    ab = minkowski_distance(A, B, metric)
    bc = minkowski_distance(B, C, metric)
    ac = minkowski_distance(A, C, metric)
    assert ac <= (ab + bc) * (1 + 1e-12) + 1e-12

def test_metric_axioms_random_triples() -> None:
    """Test symmetry, triangle inequality and monotonicity in `k` on 10^4 seeded random triples."""

    rng = np.random.default_rng(20240501)
    metrics = [Metric.from_order(k) for k in (1, 1.5, 2, 3, 7)]

    for _ in range(10_000):
        A, B, C = _random_point(rng), _random_point(rng), _random_point(rng)
        previous = math.inf
        for metric in metrics:
            ab = minkowski_distance(A, B, metric)
            assert ab == minkowski_distance(B, A, metric)
            assert minkowski_distance(A, C, metric) <= (ab + minkowski_distance(B, C, metric)) * (1 + 1e-12)
            # nonincreasing in k
            assert ab <= previous * (1 + 1e-12)
            previous = ab

    return

# point_line_distance_taxicab
def test_point_line_distance_examples() -> None:
    """Test the distance of a point from a line on the reference cases."""

    assert point_line_distance_taxicab(Point(0.0, 0.0), Line(1.0, 1.0, -2.0)) == 2.0
    assert point_line_distance_taxicab(Point(1.0, 1.0), Line(1.0, 0.0, 0.0)) == 1.0
    assert point_line_distance_taxicab(Point(2.0, -1.0), Line(2.0, 1.0, -3.0)) == 0.0
    return

def _brute_force_line_distance(P: Point, line: Line) -> float:
    # zoom on the minimum of d1(P, Q) for Q sampled on the line
    a, b, c = line.a, line.b, line.c
    norm = math.hypot(a, b)
    offset = line.evaluate(P) / norm ** 2
    foot = np.array([P.x - a * offset, P.y - b * offset])
    direction = np.array([-b, a]) / norm

    center = 0.0
    half = 2 * abs(line.evaluate(P)) / min(abs(a), abs(b)) + 1.0
    best = math.inf
    for _ in range(8):
        t = np.linspace(center - half, center + half, 1001)
        qx = foot[0] + t * direction[0]
        qy = foot[1] + t * direction[1]
        d = np.abs(qx - P.x) + np.abs(qy - P.y)
        i = int(np.argmin(d))
        best = min(best, float(d[i]))
        center = float(t[i])
        half = 2 * (2 * half / 1000)
    return best

def test_point_line_distance_brute_force() -> None:
    """Test the closed form against a sampled minimization on 10^3 random instances."""

    rng = np.random.default_rng(7)
    for _ in range(1_000):
        P = _random_point(rng)
        a, b = rng.uniform(0.1, 10, 2) * rng.choice([-1, 1], 2)
        line = Line(float(a), float(b), float(rng.uniform(-100, 100)))

        expected = _brute_force_line_distance(P, line)
        assert point_line_distance_taxicab(P, line) == pytest.approx(expected, abs = 1e-6)

    return

def test_distances_scaling() -> None:
    """Test that scaling coordinates and `c` by `s > 0` scales both distances by `s`."""

    rng = np.random.default_rng(11)
    for _ in range(200):
        A, B = _random_point(rng), _random_point(rng)
        line = Line(*rng.uniform(0.5, 3, 2), rng.uniform(-10, 10))
        s = float(rng.uniform(0.1, 10))

        for metric in (TAXICAB, EUCLIDEAN):
            assert minkowski_distance(A.scale(s), B.scale(s), metric) == pytest.approx(s * minkowski_distance(A, B, metric), rel = 1e-12)

        assert point_line_distance_taxicab(A.scale(s), line.scale(s)) == pytest.approx(s * point_line_distance_taxicab(A, line), rel = 1e-9, abs = 1e-9)

    return

def test_line_translate() -> None:
    """Test that translating a point and a line together keeps their distance."""

    P = Point(1.0, 2.0)
    line = Line(2.0, -1.0, 3.0)
    moved = point_line_distance_taxicab(P.translate(5.0, -3.0), line.translate(5.0, -3.0))
    assert moved == pytest.approx(point_line_distance_taxicab(P, line), abs = 1e-12)
    return
