import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bos_oracle import bounding_box, membership
from saddle_walk.bos import bos_boundary, bos_contains, bos_region
from saddle_walk.saddle import to_saddle, to_task


@pytest.fixture
def sym():
    return bos_region((0.0, 0.1), (0.0, -0.1))


def test_simple_points(sym):
    assert bos_contains((0.0, 0.0), sym)
    assert bos_contains((0.0, 0.1), sym)
    assert not bos_contains((0.0, 0.101), sym)
    # left half is capped at +d_h, the right half at -d_h
    wide = bos_region((0.0, 0.2), (0.0, -0.2))
    assert bos_contains((-0.15, 0.05), wide)
    assert not bos_contains((0.15, 0.05), wide)
    assert bos_contains((0.15, -0.05), wide)
    assert not bos_contains((-0.15, -0.05), wide)
    assert bos_contains((0.05, 0.0), sym)


def test_boundary_extent(sym):
    poly = bos_boundary(sym, 360, saddle=True)
    assert poly[:, 0].min() == pytest.approx(-0.1, abs=1e-12)
    assert poly[:, 0].max() == pytest.approx(0.1, abs=1e-12)
    assert np.abs(poly[:, 1]).max() == pytest.approx(0.1, abs=1e-12)
    np.testing.assert_allclose(poly[0], poly[-1], atol=1e-15)


def test_boundary_counterclockwise_and_closed():
    reg = bos_region((0.35, 0.07), (0.0, -0.07), 0.1)
    poly = bos_boundary(reg, 200)
    x, y = poly[:, 0], poly[:, 1]
    area = 0.5 * np.sum(x[:-1] * y[1:] - x[1:] * y[:-1])
    assert area > 0
    assert all(bos_contains(p, reg) for p in poly)


def test_boundary_needs_enough_points(sym):
    with pytest.raises(ValueError):
        bos_boundary(sym, 7)


def test_wide_posture_boundary_has_caps():
    reg = bos_region((0.0, 0.3), (0.0, -0.3), 0.1)
    poly = bos_boundary(reg, 400, saddle=True)
    c = math.sqrt(0.3 ** 2 - 0.1 ** 2)
    for corner in [(0.3, 0.0), (0.1, 0.0), (0.1, c), (-0.3, 0.0), (-0.1, 0.0), (-0.1, -c)]:
        assert np.min(np.hypot(*(poly - corner).T)) < 1e-12
    assert np.abs(poly[:, 1]).max() == pytest.approx(0.3, abs=1e-12)
    upper = poly[poly[:, 1] > 1e-9]
    assert upper[:, 0].max() == pytest.approx(0.1, abs=1e-12)
    assert len(bos_boundary(reg, 8)) == 8


postures = st.tuples(st.floats(-1, 1), st.floats(-1, 1), st.floats(0.05, 0.6), st.floats(-math.pi, math.pi))


def _posture(x, y, half, ang):
    c = np.array([x, y])
    u = half * np.array([math.cos(ang), math.sin(ang)])
    return tuple(c + u), tuple(c - u)


@settings(max_examples=60)
@given(postures, st.floats(-1, 1), st.floats(-1, 1))
def test_transform_invariance(post, a, b):
    cl, cr = _posture(*post)
    reg = bos_region(cl, cr)
    p = np.array(cl) * 0.5 + np.array(cr) * 0.5 + 0.3 * np.array([a, b])
    q = to_task(to_saddle(p, reg.frame), reg.frame)
    assert bos_contains(p, reg) == bos_contains(q, reg) or np.min(membership([p], cl, cr, 0.1)[1]) < 1e-9


@given(postures, st.floats(1.0, 1.5), st.floats(-1, 1), st.floats(-1, 1))
def test_monotone_in_radius(post, grow, a, b):
    cl, cr = _posture(*post)
    small = bos_region(cl, cr)
    mid = 0.5 * (np.array(cl) + np.array(cr))
    cl2 = tuple(mid + grow * (np.array(cl) - mid))
    cr2 = tuple(mid + grow * (np.array(cr) - mid))
    big = bos_region(cl2, cr2)
    p = mid + 0.4 * np.array([a, b])
    if bos_contains(p, small):
        assert bos_contains(p, big)


def test_raster_agreement_on_random_postures():
    rng = np.random.default_rng(1234)
    total = 0
    for _ in range(100):
        post = (rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.03, 0.4), rng.uniform(-math.pi, math.pi))
        cl, cr = _posture(*post)
        x0, x1, y0, y1 = bounding_box(cl, cr)
        gx, gy = np.meshgrid(np.linspace(x0, x1, 100), np.linspace(y0, y1, 100))
        pts = np.column_stack([gx.ravel(), gy.ravel()])
        ref, near = membership(pts, cl, cr, 0.1)
        got = bos_contains(pts, bos_region(cl, cr, 0.1))
        away = near > 1e-6
        assert not np.any(ref[away] != got[away])
        total += int(away.sum())
    assert total > 900_000
