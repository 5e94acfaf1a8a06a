import math

import numpy as np
import pandas as pd
import pytest

from cevian.errors import DegenerateInput, PointAtInfinity, TangentPole
from cevian.morley import (
    ANCHORS,
    NumBary,
    NumTri,
    angle_point,
    build_numeric_config,
    curve_frame,
    d_constructive,
    d_of_k,
    isogonal_conjugate,
    known_centers,
    limit_slopes,
    morley_triangle,
    q_of_k,
    r_at_one,
    r_of_k,
    sample_curve,
    second_morley_center,
    to_csv,
    with_anchors,
)
from cevian.triangle import Triangle

TOL = 1e-9


def _random_scalene(rng):
    while True:
        try:
            tri = NumTri(*(tuple(rng.uniform(0, 10, 2)) for _ in range(3)))
        except DegenerateInput:
            continue
        a, b, c = tri.sides
        acute = max(tri.angles) < math.pi / 2 - 0.05
        if acute and min(tri.angles) > 0.2 and min(abs(a - b), abs(b - c), abs(c - a)) > 0.1:
            return tri


@pytest.fixture(scope="module")
def random_tris():
    rng = np.random.default_rng(17)
    return [_random_scalene(rng) for _ in range(20)]


def test_numtri_validation():
    with pytest.raises(DegenerateInput):
        NumTri((0, 0), (1, 1), (2, 2))
    tri = NumTri.from_triangle(Triangle((0, 0), (4, 0), (0, 3)))
    assert sum(tri.angles) == pytest.approx(math.pi)
    assert tri.angles[0] == pytest.approx(math.pi / 2)


def test_numbary_normalizes():
    assert list(NumBary(2, 2, 4)) == [0.25, 0.25, 0.5]
    with pytest.raises(PointAtInfinity):
        NumBary(1, -1, 0)


def test_anchor_values(num_tri):
    centers = known_centers(num_tri)
    assert r_of_k(num_tri, 0.5).close(centers["incenter"], TOL)
    assert r_of_k(num_tri, -1).close(centers["orthocenter"], TOL)
    assert r_of_k(num_tri, 0).close(centers["angle_point"], TOL)
    assert d_of_k(num_tri, 0.5).close(centers["gergonne"], TOL)
    assert d_of_k(num_tri, 1).close(centers["orthocenter"], TOL)


def test_anchors_on_random_triangles(random_tris):
    for tri in random_tris:
        centers = known_centers(tri)
        assert r_of_k(tri, 0.5).close(centers["incenter"], TOL)
        assert r_of_k(tri, -1).close(centers["orthocenter"], TOL)
        assert d_of_k(tri, 0.5).close(centers["gergonne"], TOL)
        assert d_of_k(tri, 1).close(centers["orthocenter"], TOL)
        assert second_morley_center(tri).close(r_of_k(tri, 1 / 3), TOL)
        x, y, z = morley_triangle(tri)
        sides = [np.linalg.norm(x - y), np.linalg.norm(y - z), np.linalg.norm(z - x)]
        assert max(sides) - min(sides) < 1e-10 * max(sides)


def test_curve_is_self_isogonal(num_tri):
    for k in np.linspace(0.05, 0.95, 10):
        assert isogonal_conjugate(num_tri, r_of_k(num_tri, k)).close(r_of_k(num_tri, 1 - k), TOL)


def test_conjugate_of_the_orthocenter_end(num_tri):
    conj = isogonal_conjugate(num_tri, r_of_k(num_tri, -1))
    assert conj.close(known_centers(num_tri)["circumcenter"], TOL)


def test_limits(num_tri):
    assert r_of_k(num_tri, 1e-4).distance(angle_point(num_tri)) < 1e-4
    assert r_of_k(num_tri, 1 - 1e-4).distance(r_at_one(num_tri)) < 1e-4
    slopes = limit_slopes(num_tri)
    assert list(slopes.columns) == ["eps", "near_0", "near_1", "slope_0", "slope_1"]
    assert len(slopes) == 3
    assert np.all(np.isfinite(slopes[["slope_0", "slope_1"]].to_numpy()))
    assert slopes["near_0"].is_monotonic_decreasing


def test_k_outside_range(num_tri):
    with pytest.raises(ValueError):
        r_of_k(num_tri, 1.5)
    with pytest.raises(ValueError):
        build_numeric_config(num_tri, 0)


def test_tangent_pole(num_right_tri):
    with pytest.raises(TangentPole):
        d_of_k(num_right_tri, 1)


def test_constructive_matches_closed_forms(num_tri):
    for k in (0.2, 0.3, 0.7, 0.9):
        cfg = build_numeric_config(num_tri, k)
        assert num_tri.to_bary(cfg.r).close(r_of_k(num_tri, k), TOL)
        assert d_constructive(num_tri, k).close(d_of_k(num_tri, k), TOL)


def test_q_curve(num_tri):
    assert q_of_k(num_tri, 0.5).close(known_centers(num_tri)["incenter"], TOL)
    assert q_of_k(num_tri, 1e-4).distance(angle_point(num_tri)) < 1e-4
    assert q_of_k(num_tri, 0.0).close(angle_point(num_tri), 0.0)


@pytest.mark.parametrize("k", [0.2, 0.3, 0.4, 0.9])
def test_q_curve_is_symmetric(num_tri, k):
    assert q_of_k(num_tri, k).close(q_of_k(num_tri, 1 - k), 1e-8)


def test_q_curve_upper_limit_is_angle_point(num_tri):
    near_one = q_of_k(num_tri, 1 - 1e-4)
    assert near_one.distance(angle_point(num_tri)) < 1e-4
    assert near_one.distance(r_at_one(num_tri)) > 1e-2
    assert q_of_k(num_tri, 1.0).close(angle_point(num_tri), 0.0)


def test_q_curve_drift_is_first_order(num_tri):
    r0 = angle_point(num_tri)
    coarse, fine = (q_of_k(num_tri, eps).distance(r0) for eps in (1e-2, 1e-3))
    assert coarse > 1e-4
    assert fine < coarse / 5


@pytest.mark.parametrize("k", [0.2, 0.35])
def test_numeric_config_swaps_primed_points(num_tri, k):
    cfg, mirrored = build_numeric_config(num_tri, k), build_numeric_config(num_tri, 1 - k)
    for name in "XYZ":
        assert np.allclose(cfg.hexagon[name + "'"], mirrored.hexagon[name], atol=1e-9)
    assert np.allclose(cfg.r_prime, mirrored.r, atol=1e-9)


def test_morley_triangle_is_equilateral(num_tri):
    x, y, z = morley_triangle(num_tri)
    sides = [np.linalg.norm(x - y), np.linalg.norm(y - z), np.linalg.norm(z - x)]
    assert max(sides) - min(sides) < 1e-10 * max(sides)


def test_second_morley_center(num_tri):
    assert second_morley_center(num_tri).close(r_of_k(num_tri, 1 / 3), TOL)


def test_sample_curve_notes_undefined_points(num_right_tri):
    samples = sample_curve(num_right_tri, [0.25, 1.0], curve="d")
    assert samples[0].point is not None
    assert samples[1].point is None and samples[1].note
    assert sample_curve(num_right_tri, []) == []
    with pytest.raises(ValueError):
        sample_curve(num_right_tri, [2.0])


def test_with_anchors():
    grid = with_anchors([0.25, 0.5])
    assert set(ANCHORS) <= set(grid)
    assert grid == sorted(grid)
    assert grid.count(0.5) == 1


def test_csv(num_right_tri):
    text = to_csv(num_right_tri, sample_curve(num_right_tri, [0.5, 1.0], curve="d"))
    lines = text.splitlines()
    assert lines[0] == "k,x,y,z,cartesian_x,cartesian_y"
    assert lines[-1].startswith("# k=1 skipped:")
    values = [float(v) for v in lines[1].split(",")]
    assert values[0] == 0.5
    assert sum(values[1:4]) == pytest.approx(1.0)


def test_curve_frame(num_tri):
    samples = sample_curve(num_tri, with_anchors([]))
    frame = curve_frame(num_tri, samples)
    assert isinstance(frame, pd.DataFrame)
    assert len(frame) == len(ANCHORS)
    incenter = frame[frame["k"] == 0.5].iloc[0]
    expected = num_tri.to_cartesian(known_centers(num_tri)["incenter"])
    assert incenter["cartesian_x"] == pytest.approx(expected[0])
    assert incenter["cartesian_y"] == pytest.approx(expected[1])
