import numpy as np
import pytest

from circlehold import (
    DegenerateInput,
    Polygon2,
    best_fit_equilateral,
    breadth2,
    chebyshev_inscribed,
    circle_support_points,
    clip_halfplane_2d,
    convex_hull_2d,
    equilateral_triangle,
    hausdorff_distance,
    horizontal_width,
    min_enclosing_circle,
    point_polygon_distance,
    random_axis_crossing_polygon,
    random_convex_polygon,
    split_width_identities,
    width2,
)

SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def test_hull_drops_interior_points():
    pts = np.vstack([SQUARE, [[0.5, 0.5], [0.25, 0.75], [0.9, 0.1]]])
    hull = convex_hull_2d(pts)
    assert len(hull) == 4
    assert set(map(tuple, hull)) == set(map(tuple, SQUARE))


def test_collinear_points_are_degenerate():
    # the raw hull collapses to a segment; polygon construction refuses it
    pts = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])
    assert len(convex_hull_2d(pts)) == 2
    with pytest.raises(DegenerateInput):
        Polygon2.from_points(pts)


def test_width_of_square_and_triangle():
    w, u = width2(Polygon2.from_points(SQUARE))
    assert w == pytest.approx(1.0, abs=1e-12)
    tri = equilateral_triangle(3.0)
    w, _ = width2(tri)
    # the width of an equilateral triangle is its height
    assert w == pytest.approx(3.0, abs=1e-9)


def test_breadth_matches_support_gap():
    P = Polygon2.from_points(SQUARE)
    assert breadth2(P, (1.0, 0.0)) == pytest.approx(1.0)
    d = np.array([1.0, 1.0]) / np.sqrt(2.0)
    assert breadth2(P, d) == pytest.approx(np.sqrt(2.0))


# --- horizontal width -------------------------------------------------------

def test_horizontal_width_thin_triangle():
    # sheared triangle: the minimizing strip is not axis-aligned
    P = Polygon2.from_points(np.array([[0.0, 0.0], [1.0, 0.0], [5.0, 1.0]]))
    w, strip = horizontal_width(P)
    assert w == pytest.approx(1.0, abs=1e-12)


def test_horizontal_width_parallelogram():
    P = Polygon2.from_points(np.array([[0.0, 0.0], [1.0, 0.0],
                                       [3.0, 1.0], [2.0, 1.0]]))
    w, strip = horizontal_width(P)
    assert w == pytest.approx(1.0, abs=1e-12)
    assert strip.slope == pytest.approx(2.0, abs=1e-9)


def test_horizontal_width_shear_invariance():
    rng = np.random.default_rng(3)
    for _ in range(200):
        P = random_convex_polygon(rng)
        w0, _ = horizontal_width(P)
        lam = rng.uniform(-3.0, 3.0)
        sheared = P.vertices.copy()
        sheared[:, 0] += lam * sheared[:, 1]
        w1, _ = horizontal_width(Polygon2.from_points(sheared))
        assert w1 == pytest.approx(w0, rel=1e-9, abs=1e-12)


def test_horizontal_width_dominates_ordinary_width():
    rng = np.random.default_rng(4)
    for _ in range(200):
        P = random_convex_polygon(rng)
        wh, _ = horizontal_width(P)
        w, _ = width2(P)
        assert wh >= w - 1e-12


# --- split identities -------------------------------------------------------

def test_split_identities_triangle():
    P = Polygon2.from_points(np.array([[0.0, 1.0], [-1.0, -1.0], [1.0, -1.0]]))
    sw = split_width_identities(P, 0.0)
    assert sw.upper == pytest.approx(1.0, abs=1e-12)
    assert sw.lower == pytest.approx(2.0, abs=1e-12)
    assert sw.chord == pytest.approx(1.0, abs=1e-12)
    assert sw.union == pytest.approx(2.0, abs=1e-12)
    assert sw.residual_min < 1e-12 and sw.residual_max < 1e-12


def test_split_identities_random():
    rng = np.random.default_rng(11)
    for _ in range(300):
        P = random_axis_crossing_polygon(rng)
        sw = split_width_identities(P, 0.0)
        assert sw.residual_min < 1e-9
        assert sw.residual_max < 1e-9


# --- enclosing / inscribed circles -----------------------------------------

def test_min_enclosing_circle_known():
    c = min_enclosing_circle(np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 1.0]]))
    assert c.center == pytest.approx((1.0, 0.0), abs=1e-9)
    assert c.radius == pytest.approx(1.0, abs=1e-9)


def test_min_enclosing_circle_random():
    rng = np.random.default_rng(5)
    for _ in range(200):
        pts = rng.standard_normal((int(rng.integers(3, 40)), 2))
        c = min_enclosing_circle(pts)
        d = np.linalg.norm(pts - np.asarray(c.center), axis=1)
        assert d.max() <= c.radius + 1e-9
        # minimality: at least two points on the boundary
        assert len(circle_support_points(c, pts)) >= 2


def test_chebyshev_square():
    c = chebyshev_inscribed(Polygon2.from_points(SQUARE))
    assert c.radius == pytest.approx(0.5, abs=1e-9)
    assert c.center == pytest.approx((0.5, 0.5), abs=1e-9)


def test_chebyshev_equilateral():
    # inradius of an equilateral triangle is a third of its height
    c = chebyshev_inscribed(equilateral_triangle(3.0))
    assert c.radius == pytest.approx(1.0, abs=1e-9)


def test_width_at_most_three_inradii():
    rng = np.random.default_rng(6)
    for _ in range(300):
        P = random_convex_polygon(rng)
        w, _ = width2(P)
        r = chebyshev_inscribed(P).radius
        assert w <= 3.0 * r + 1e-9


# --- distances and fitting --------------------------------------------------

def test_point_polygon_distance():
    P = Polygon2.from_points(SQUARE)
    assert point_polygon_distance((0.5, 0.5), P) == 0.0
    assert point_polygon_distance((2.0, 0.5), P) == pytest.approx(1.0)
    assert point_polygon_distance((2.0, 2.0), P) == pytest.approx(np.sqrt(2.0))


def test_hausdorff_between_squares():
    Q = Polygon2.from_points(SQUARE + np.array([0.25, 0.0]))
    assert hausdorff_distance(Polygon2.from_points(SQUARE), Q) == \
        pytest.approx(0.25, abs=1e-9)


def test_best_fit_equilateral_recovers_exact():
    tri = equilateral_triangle(2.5, angle=0.7, center=(0.3, -0.2))
    fit, haus, theta, center = best_fit_equilateral(tri, height=2.5)
    assert haus < 1e-7


def test_clip_halfplane():
    out = clip_halfplane_2d(SQUARE, (1.0, 0.0), 0.5)
    assert out[:, 0].max() <= 0.5 + 1e-12
    assert out[:, 0].min() == pytest.approx(0.0)
    assert len(out) == 4
