import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from saddle_walk.errors import InvalidInputError, UndefinedTargetError
from saddle_walk.feet import swing_target, swing_trajectory


def test_target_from_slope():
    x, y = swing_target((0.0, -0.0664), 0.1328, 0.1328 / 0.3, "left")
    assert x == pytest.approx(0.3, abs=1e-12)
    assert y == pytest.approx(0.0664, abs=1e-12)


def test_abreast_and_degenerate_slopes():
    assert swing_target((0.2, 0.05), 0.12, math.inf, "right") == (0.2, pytest.approx(-0.07))
    with pytest.raises(UndefinedTargetError):
        swing_target((0.0, 0.0), 0.12, 0.0)


@given(st.floats(0.01, 10), st.sampled_from(["left", "right"]))
def test_target_on_line(m, side):
    stance = (0.4, -0.05)
    x, y = swing_target(stance, 0.13, m if side == "left" else m, side)
    assert abs(y - stance[1]) == pytest.approx(0.13)
    assert (y - stance[1]) / (x - stance[0]) == pytest.approx(m, rel=1e-12)


def test_swing_boundaries_and_apex():
    lift, land = (0.0, -0.1, 0.0), (0.6, -0.1, 0.0)
    np.testing.assert_allclose(swing_trajectory(1.0, lift, land, 1.0, 2.0), lift, atol=1e-15)
    np.testing.assert_allclose(swing_trajectory(2.0, lift, land, 1.0, 2.0), land, atol=1e-15)
    mid = swing_trajectory(1.5, lift, land, 1.0, 2.0, clearance=0.05)
    np.testing.assert_allclose(mid, (0.3, -0.1, 0.05), atol=1e-15)
    # clamped outside the window
    np.testing.assert_allclose(swing_trajectory(5.0, lift, land, 1.0, 2.0), land, atol=1e-15)


def test_swing_boundary_velocity_is_zero():
    lift, land = (0.0, 0.0, 0.0), (0.7, 0.0, 0.0)
    h = 1e-6
    a = swing_trajectory(h, lift, land, 0.0, 1.0)[0] - swing_trajectory(0.0, lift, land, 0.0, 1.0)[0]
    assert abs(a / h) < 1e-6


def test_empty_window_rejected():
    with pytest.raises(InvalidInputError):
        swing_trajectory(0.0, (0, 0, 0), (1, 0, 0), 1.0, 1.0)
