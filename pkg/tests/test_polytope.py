import numpy as np
import pytest

from circlehold import (
    DegenerateInput,
    HalfSpace,
    build_hull,
    clip_halfspace,
    min_cylinder,
    point_location,
    segment_distance,
    slice_plane,
    width3,
)

CUBE = np.array([
    [0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1],
    [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1],
], dtype=float)


def unit_tetrahedron():
    # regular tetrahedron with unit edges
    s = 1.0 / np.sqrt(8.0)
    return build_hull(s * np.array([
        [1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1],
    ], dtype=float))


def random_rotation(rng):
    q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
    if np.linalg.det(q) < 0:
        q[:, 0] *= -1.0
    return q


def test_hull_of_cube():
    K = build_hull(np.vstack([CUBE, [[0.5, 0.5, 0.5]]]))
    assert len(K.vertices) == 8
    assert len(K.faces) == 6
    normals, offsets = K.face_planes()
    assert np.allclose(np.linalg.norm(normals, axis=1), 1.0)
    # interior point strictly inside every face plane
    assert np.all(normals @ np.full(3, 0.5) < offsets)


def test_hull_rejects_flat_input():
    with pytest.raises(DegenerateInput):
        build_hull(np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]], float))


def test_width_of_cube_and_tetrahedron():
    assert width3(build_hull(CUBE)).width == pytest.approx(1.0, abs=1e-9)
    # the width of a unit-edge regular tetrahedron is 1/sqrt(2)
    assert width3(unit_tetrahedron()).width == pytest.approx(
        np.sqrt(2.0) / 2.0, abs=1e-9)


def test_width_rotation_invariant():
    rng = np.random.default_rng(12)
    K = unit_tetrahedron()
    w0 = width3(K).width
    for _ in range(20):
        R = random_rotation(rng)
        w = width3(build_hull(K.vertices @ R.T)).width
        assert w == pytest.approx(w0, abs=1e-7)


def test_width_result_is_a_certificate():
    K = build_hull(CUBE)
    res = width3(K)
    u = np.asarray(res.direction)
    assert K.breadth(u) == pytest.approx(res.width, abs=1e-9)


def test_min_cylinder_cube():
    res = min_cylinder(build_hull(CUBE))
    assert res.diameter == pytest.approx(np.sqrt(2.0), abs=1e-4)


def test_min_cylinder_long_box():
    verts = CUBE.copy()
    verts[:, 2] *= 10.0
    res = min_cylinder(build_hull(verts))
    assert res.diameter == pytest.approx(np.sqrt(2.0), abs=1e-4)
    # the optimal axis runs along the long direction
    assert abs(np.asarray(res.axis_direction)[2]) > 0.999


def test_point_location():
    K = build_hull(CUBE)
    assert point_location(K, (0.5, 0.5, 0.5)) == "interior"
    assert point_location(K, (1.0, 0.5, 0.5)) == "boundary"
    assert point_location(K, (2.0, 0.0, 0.0)) == "exterior"


def test_contains_agrees_with_location():
    rng = np.random.default_rng(13)
    K = build_hull(CUBE)
    pts = rng.uniform(-0.5, 1.5, size=(500, 3))
    for p in pts:
        inside = bool(np.all((p >= 0) & (p <= 1)))
        assert K.contains(p) == inside


def test_clip_halfspace_cube():
    K = build_hull(CUBE)
    out = clip_halfspace(K, HalfSpace((1.0, 0.0, 0.0), 0.5))
    assert out.vertices[:, 0].max() <= 0.5 + 1e-12
    assert len(out.vertices) == 8


def test_clip_through_vertex():
    out = clip_halfspace(unit_tetrahedron(), HalfSpace((0.0, 0.0, 1.0), 0.0))
    assert out.vertices[:, 2].max() <= 1e-9


def test_slice_cube():
    sec = slice_plane(build_hull(CUBE), (0.0, 0.0, 1.0), 0.5)
    assert sec.kind == "polygon"
    assert len(sec.points2) == 4
    c = sec.circumcircle()
    assert c.radius == pytest.approx(np.sqrt(2.0) / 2.0, abs=1e-9)


def test_slice_misses_body():
    sec = slice_plane(build_hull(CUBE), (0.0, 0.0, 1.0), 2.0)
    assert sec.kind == "empty"


def test_segment_distance_cases():
    # crossing segments
    assert segment_distance((0, 0, 0), (1, 0, 0), (0.5, -1, 0), (0.5, 1, 0)) == 0.0
    # parallel offset
    assert segment_distance((0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 1)) == \
        pytest.approx(np.sqrt(2.0))
    # skew: closest at an endpoint
    assert segment_distance((0, 0, 0), (1, 0, 0), (2, 0, 1), (3, 0, 1)) == \
        pytest.approx(np.sqrt(2.0))


def test_transformed_preserves_breadth():
    rng = np.random.default_rng(14)
    K = build_hull(CUBE)
    R = random_rotation(rng)
    t = rng.standard_normal(3)
    K2 = K.transformed(R, t)
    u = rng.standard_normal(3)
    u /= np.linalg.norm(u)
    assert K2.breadth(R @ u) == pytest.approx(K.breadth(u), abs=1e-9)
