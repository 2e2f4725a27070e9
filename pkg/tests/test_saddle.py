import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from saddle_walk.errors import DegeneratePostureError
from saddle_walk.saddle import build_frame, to_saddle, to_task

coord = st.floats(min_value=-5, max_value=5, allow_nan=False)
point = st.tuples(coord, coord)


def _distinct(a, b):
    return math.hypot(a[0] - b[0], a[1] - b[1]) > 1e-3


def test_symmetric_standing_posture():
    f = build_frame((0, 0.1), (0, -0.1))
    assert f.origin == (0.0, 0.0)
    assert f.Y_sLF == pytest.approx(0.1) and f.Y_sRF == pytest.approx(-0.1)
    assert f.lam == pytest.approx(0.0, abs=1e-15)
    assert math.isinf(f.m_slope)
    np.testing.assert_allclose(to_saddle((0.3, 0.2), f), (0.3, 0.2), atol=1e-15)


def test_slope_of_staggered_posture():
    f = build_frame((0.3, 0.0664), (0.0, -0.0664))
    assert f.m_slope == pytest.approx(0.44267, abs=1e-5)


def test_coincident_cops_rejected():
    with pytest.raises(DegeneratePostureError):
        build_frame((0, 0), (0, 0))


def test_cops_map_onto_saddle_axis():
    cl, cr = (0.42, 0.13), (0.05, -0.02)
    f = build_frame(cl, cr)
    np.testing.assert_allclose(to_saddle(cl, f), (0, f.Y_sLF), atol=1e-15)
    np.testing.assert_allclose(to_saddle(cr, f), (0, f.Y_sRF), atol=1e-15)
    np.testing.assert_allclose(to_saddle(f.origin, f), (0, 0), atol=1e-15)
    np.testing.assert_allclose(to_task((0, f.Y_sRF), f), cr, atol=1e-15)
    assert f.Y_sLF > 0 > f.Y_sRF and f.Y_sLF == -f.Y_sRF


@given(point, point, point)
def test_round_trip(cl, cr, p):
    if not _distinct(cl, cr):
        return
    f = build_frame(cl, cr)
    np.testing.assert_allclose(to_task(to_saddle(p, f), f), p, atol=1e-12)
    assert -math.pi < f.lam <= math.pi


@given(point, point, point, point)
def test_distances_preserved(cl, cr, a, b):
    if not _distinct(cl, cr):
        return
    f = build_frame(cl, cr)
    d_task = math.dist(a, b)
    d_sad = float(np.linalg.norm(to_saddle(a, f) - to_saddle(b, f)))
    assert d_sad == pytest.approx(d_task, abs=1e-12)


@given(point, point)
def test_reflection_keeps_left_positive(cl, cr):
    # mirroring the posture across the task x-axis swaps which side is "left";
    # relabelling restores Y_sLF > 0 and turns lambda into pi - lambda
    if not _distinct(cl, cr):
        return
    f = build_frame(cl, cr)
    g = build_frame((cr[0], -cr[1]), (cl[0], -cl[1]))
    assert g.Y_sLF == pytest.approx(f.Y_sLF, abs=1e-12)
    diff = (g.lam - (-f.lam)) % (2 * math.pi)
    assert min(diff, 2 * math.pi - diff) == pytest.approx(0.0, abs=1e-12)


def test_vectorized_transform():
    f = build_frame((0.2, 0.1), (-0.1, -0.05))
    pts = np.random.default_rng(0).normal(size=(50, 2))
    batch = to_saddle(pts, f)
    for p, q in zip(pts, batch):
        np.testing.assert_allclose(to_saddle(p, f), q, atol=1e-15)
